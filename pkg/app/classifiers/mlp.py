""" The slice-triplet MLP: ReLU hidden layers, sigmoid output, full-batch gradient descent """
import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit

from core.config import MlpConfig
from core.exceptions import ClassMissing, InsufficientData, NonFiniteInput
from core.labels import Quality

logger = logging.getLogger(__name__)

SCALE_FLOOR = 1e-6
MIN_SUBJECTS_PER_CLASS = 2


def layer_shapes(layer_sizes):
    return list(zip(layer_sizes[:-1], layer_sizes[1:]))


def count_params(layer_sizes):
    """ Weights plus biases: sum of (fan_in + 1) * fan_out """
    return sum((fan_in + 1) * fan_out for fan_in, fan_out in layer_shapes(layer_sizes))


def unpack_params(params, layer_sizes):
    """ Split the flat vector into (W, b) per layer; W is stored row-major, followed by b """
    layers, offset = [], 0
    for fan_in, fan_out in layer_shapes(layer_sizes):
        weights = params[offset:offset + fan_in * fan_out].reshape(fan_in, fan_out)
        offset += fan_in * fan_out
        biases = params[offset:offset + fan_out]
        offset += fan_out
        layers.append((weights, biases))
    return layers


def init_params(layer_sizes, init_scale=0.5, seed=0):
    rng = np.random.default_rng(seed)
    return rng.uniform(-init_scale, init_scale, size=count_params(layer_sizes))


def _forward(params, layer_sizes, inputs):
    """ Output logits plus the input of every layer (needed by backprop) """
    layers = unpack_params(params, layer_sizes)
    activations = [inputs]
    hidden = inputs
    for weights, biases in layers[:-1]:
        hidden = np.maximum(hidden @ weights + biases, 0.0)
        activations.append(hidden)
    weights, biases = layers[-1]
    return (hidden @ weights + biases)[:, 0], activations


def mlp_loss_and_gradient(params, layer_sizes, inputs, targets):
    """
    Mean binary cross-entropy and its gradient with respect to the flat parameters.

    targets are 1 for PoorQuality and 0 for GoodQuality. The loss is evaluated
    from the logits, log(1 + e^z) - y z, so it stays finite for saturated outputs.
    """
    params = np.asarray(params, dtype=np.float64)
    inputs = np.asarray(inputs, dtype=np.float64)
    targets = np.asarray(targets, dtype=np.float64)
    logits, activations = _forward(params, layer_sizes, inputs)
    loss = float(np.mean(np.logaddexp(0.0, logits) - targets * logits))

    layers = unpack_params(params, layer_sizes)
    delta = ((expit(logits) - targets) / len(targets))[:, None]
    grads = []
    for index in reversed(range(len(layers))):
        weights, _ = layers[index]
        layer_input = activations[index]
        grads.append(np.concatenate([(layer_input.T @ delta).ravel(), delta.sum(axis=0)]))
        if index:
            delta = (delta @ weights.T) * (layer_input > 0)
    return loss, np.concatenate(grads[::-1])


@dataclass(frozen=True, eq=False)
class MlpModel:
    """
    Trained slice classifier.

    input_center / input_scale standardize the triplets before the first layer;
    they are fitted on the training triplets and are not trainable parameters.
    """
    layer_sizes: tuple
    params: np.ndarray
    input_center: np.ndarray
    input_scale: np.ndarray
    train_config: MlpConfig = field(default_factory=MlpConfig)
    final_loss: float = float('nan')
    loss_history: tuple = ()

    def __post_init__(self):
        if len(self.params) != count_params(self.layer_sizes):
            raise ValueError(
                f'{len(self.params)} parameters do not fit layer sizes {tuple(self.layer_sizes)}'
            )

    @property
    def n_params(self):
        return count_params(self.layer_sizes)

    @classmethod
    def initial(cls, config=None):
        config = config or MlpConfig()
        n_inputs = config.layer_sizes[0]
        return cls(
            layer_sizes=tuple(config.layer_sizes),
            params=init_params(config.layer_sizes, config.init_scale, config.seed),
            input_center=np.zeros(n_inputs),
            input_scale=np.ones(n_inputs),
            train_config=config,
        )


def mlp_predict(model, triplets):
    """ PoorQuality probability for each row of an (n, 3) triplet array """
    triplets = np.atleast_2d(np.asarray(triplets, dtype=np.float64))
    if not np.isfinite(triplets).all():
        raise NonFiniteInput('MLP input contains NaN or infinite values')
    logits, _ = _forward(model.params, model.layer_sizes, (triplets - model.input_center) / model.input_scale)
    return expit(logits)


def mlp_forward(model, triplet):
    return float(mlp_predict(model, triplet)[0])


def training_pairs(series_list, labels):
    """ Every non-degenerate triplet of a subject gets that subject's label """
    rows, targets = [], []
    for series, label in zip(series_list, labels):
        valid = series.valid_triplets
        rows.append(valid)
        targets.append(np.full(len(valid), 1.0 if label == Quality.POOR else 0.0))
    return np.concatenate(rows), np.concatenate(targets)


def _check_classes(labels):
    counts = Counter(labels)
    for quality in Quality:
        if counts[quality] == 0:
            raise ClassMissing(f'No training subject labelled {quality.label}')
    for quality in Quality:
        if counts[quality] < MIN_SUBJECTS_PER_CLASS:
            raise InsufficientData(
                f'MLP training needs at least {MIN_SUBJECTS_PER_CLASS} subjects per class, '
                f'got {counts[quality]} labelled {quality.label}'
            )


def mlp_train(series_list, labels, config=None):
    """ Fit the MLP on per-slice pairs; deterministic for a given config (seed included) """
    config = config or MlpConfig()
    labels = [Quality(int(label)) for label in labels]
    if len(series_list) != len(labels):
        raise InsufficientData('Every feature series needs exactly one label')

    _check_classes(labels)
    inputs, targets = training_pairs(series_list, labels)
    for quality, target in ((Quality.GOOD, 0.0), (Quality.POOR, 1.0)):
        if not (targets == target).any():
            raise ClassMissing(f'Every {quality.label} subject has only degenerate slices')

    center = inputs.mean(axis=0)
    scale = np.maximum(inputs.std(axis=0), SCALE_FLOOR)
    standardized = (inputs - center) / scale

    params = init_params(config.layer_sizes, config.init_scale, config.seed)
    history = []
    for _ in range(config.epochs):
        loss, gradient = mlp_loss_and_gradient(params, config.layer_sizes, standardized, targets)
        history.append(loss)
        params = params - config.learning_rate * gradient
    final_loss, _ = mlp_loss_and_gradient(params, config.layer_sizes, standardized, targets)

    logger.info('Trained MLP %s on %d slices: loss %.6f -> %.6f',
                'x'.join(map(str, config.layer_sizes)), len(targets), history[0], final_loss)
    return MlpModel(
        layer_sizes=tuple(config.layer_sizes),
        params=params,
        input_center=center,
        input_scale=scale,
        train_config=config,
        final_loss=final_loss,
        loss_history=tuple(history),
    )
