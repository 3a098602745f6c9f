"""Differentiable tensor ops.

Primitives own a forward kernel and a VJP; composite ops (conv2d, pixel
norm, minibatch stddev, losses) are built from primitives and inherit their
derivatives. Images use NHWC layout throughout.
"""

from collections.abc import Sequence
from typing import Any

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from core.constants.training import (
    LEAKY_RELU_SLOPE,
    MINIBATCH_STD_EPSILON,
    PIXEL_NORM_EPSILON,
)
from core.exceptions import ShapeMismatchError
from core.tensor.tensor import Tensor, as_tensor, make_result

Axis = int | tuple[int, ...] | None


def _sum_to_array(a: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    lead = a.ndim - len(shape)
    axes = tuple(range(lead)) + tuple(
        lead + i for i, s in enumerate(shape) if s == 1 and a.shape[lead + i] != 1
    )
    return a.sum(axis=axes, keepdims=True).reshape(shape) if axes else a.reshape(shape)


def _unbroadcast(g: Tensor, shape: tuple[int, ...]) -> Tensor:
    return g if g.shape == shape else sum_to(g, shape)


def _kept_shape(shape: tuple[int, ...], axis: Axis) -> tuple[int, ...]:
    if axis is None:
        return (1,) * len(shape)
    axes = {a % len(shape) for a in ((axis,) if isinstance(axis, int) else axis)}
    return tuple(1 if i in axes else s for i, s in enumerate(shape))


def _broadcast_shape(op: str, a: Tensor, b: Tensor) -> None:
    try:
        np.broadcast_shapes(a.shape, b.shape)
    except ValueError:
        raise ShapeMismatchError(op, a.shape, b.shape) from None


# ---------------------------------------------------------------------------
# Elementwise primitives
# ---------------------------------------------------------------------------


def add(a: Any, b: Any) -> Tensor:
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape("add", a, b)

    def vjp(g: Tensor) -> tuple[Tensor, Tensor]:
        return _unbroadcast(g, a.shape), _unbroadcast(g, b.shape)

    return make_result(a.data + b.data, (a, b), vjp, "add")


def sub(a: Any, b: Any) -> Tensor:
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape("sub", a, b)

    def vjp(g: Tensor) -> tuple[Tensor, Tensor]:
        return _unbroadcast(g, a.shape), _unbroadcast(neg(g), b.shape)

    return make_result(a.data - b.data, (a, b), vjp, "sub")


def mul(a: Any, b: Any) -> Tensor:
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape("mul", a, b)

    def vjp(g: Tensor) -> tuple[Tensor, Tensor]:
        return _unbroadcast(mul(g, b), a.shape), _unbroadcast(mul(g, a), b.shape)

    return make_result(a.data * b.data, (a, b), vjp, "mul")


def div(a: Any, b: Any) -> Tensor:
    a, b = as_tensor(a), as_tensor(b)
    _broadcast_shape("div", a, b)

    def vjp(g: Tensor) -> tuple[Tensor, Tensor]:
        ga = div(g, b)
        gb = neg(mul(ga, div(a, b)))
        return _unbroadcast(ga, a.shape), _unbroadcast(gb, b.shape)

    return make_result(a.data / b.data, (a, b), vjp, "div")


def neg(x: Any) -> Tensor:
    x = as_tensor(x)
    return make_result(-x.data, (x,), lambda g: (neg(g),), "neg")


def power(x: Any, exponent: float) -> Tensor:
    """Elementwise ``x ** exponent`` for a constant exponent."""
    x = as_tensor(x)
    exponent = float(exponent)

    def vjp(g: Tensor) -> tuple[Tensor]:
        return (mul(g, mul(exponent, power(x, exponent - 1.0))),)

    data = np.power(x.data, exponent).astype(x.dtype, copy=False)
    return make_result(data, (x,), vjp, "power")


def exp(x: Any) -> Tensor:
    x = as_tensor(x)
    out = make_result(np.exp(x.data), (x,), lambda g: (mul(g, out),), "exp")
    return out


def log(x: Any) -> Tensor:
    x = as_tensor(x)
    return make_result(np.log(x.data), (x,), lambda g: (div(g, x),), "log")


def tanh(x: Any) -> Tensor:
    x = as_tensor(x)

    def vjp(g: Tensor) -> tuple[Tensor]:
        return (mul(g, sub(1.0, mul(out, out))),)

    out = make_result(np.tanh(x.data), (x,), vjp, "tanh")
    return out


def leaky_relu(x: Any, slope: float = LEAKY_RELU_SLOPE) -> Tensor:
    """``x`` where positive, ``slope * x`` elsewhere."""
    x = as_tensor(x)
    mask = np.where(x.data > 0, 1.0, slope).astype(x.dtype)
    gate = Tensor(mask, dtype=mask.dtype)
    return make_result(x.data * mask, (x,), lambda g: (mul(g, gate),), "leaky_relu")


def sqrt(x: Any) -> Tensor:
    return power(x, 0.5)


# ---------------------------------------------------------------------------
# Shape primitives
# ---------------------------------------------------------------------------


def reshape(x: Any, shape: Sequence[int]) -> Tensor:
    x = as_tensor(x)
    try:
        data = x.data.reshape(tuple(shape))
    except ValueError:
        raise ShapeMismatchError("reshape", x.shape, tuple(shape)) from None
    return make_result(data, (x,), lambda g: (reshape(g, x.shape),), "reshape")


def transpose(x: Any, axes: Sequence[int] | None = None) -> Tensor:
    x = as_tensor(x)
    perm = tuple(reversed(range(x.ndim))) if axes is None else tuple(axes)
    if sorted(perm) != list(range(x.ndim)):
        raise ShapeMismatchError("transpose", x.shape, perm)
    inverse = tuple(np.argsort(perm))
    return make_result(
        np.transpose(x.data, perm), (x,), lambda g: (transpose(g, inverse),), "transpose"
    )


def broadcast_to(x: Any, shape: Sequence[int]) -> Tensor:
    x = as_tensor(x)
    shape = tuple(shape)
    try:
        data = np.broadcast_to(x.data, shape)
    except ValueError:
        raise ShapeMismatchError("broadcast_to", x.shape, shape) from None
    return make_result(data, (x,), lambda g: (sum_to(g, x.shape),), "broadcast_to")


def sum_to(x: Any, shape: Sequence[int]) -> Tensor:
    """Sum over broadcast axes so the result has ``shape``."""
    x = as_tensor(x)
    shape = tuple(shape)
    data = _sum_to_array(x.data, shape)
    return make_result(data, (x,), lambda g: (broadcast_to(g, x.shape),), "sum_to")


def reduce_sum(x: Any, axis: Axis = None, keepdims: bool = False) -> Tensor:
    x = as_tensor(x)
    data = x.data.sum(axis=axis, keepdims=keepdims)
    kept_shape = _kept_shape(x.shape, axis)

    def vjp(g: Tensor) -> tuple[Tensor]:
        return (broadcast_to(reshape(g, kept_shape), x.shape),)

    return make_result(np.asarray(data, dtype=x.dtype), (x,), vjp, "sum")


def reduce_mean(x: Any, axis: Axis = None, keepdims: bool = False) -> Tensor:
    x = as_tensor(x)
    total = reduce_sum(x, axis=axis, keepdims=keepdims)
    count = x.size // max(total.size, 1)
    return mul(total, 1.0 / count)


def index(x: Any, key: Any) -> Tensor:
    """Basic (slice/integer) indexing; the adjoint is ``scatter``."""
    x = as_tensor(x)
    data = np.array(x.data[key], dtype=x.dtype)
    return make_result(data, (x,), lambda g: (scatter(g, key, x.shape),), "index")


def scatter(x: Any, key: Any, shape: Sequence[int]) -> Tensor:
    """Zeros of ``shape`` with ``x`` written at ``key`` (basic indexing)."""
    x = as_tensor(x)
    out = np.zeros(tuple(shape), dtype=x.dtype)
    try:
        out[key] = x.data
    except ValueError:
        raise ShapeMismatchError("scatter", x.shape, tuple(shape)) from None
    return make_result(out, (x,), lambda g: (index(g, key),), "scatter")


def concat(tensors: Sequence[Any], axis: int = -1) -> Tensor:
    """Concatenate along ``axis`` (the channel axis by default)."""
    parts = [as_tensor(t) for t in tensors]
    try:
        data = np.concatenate([p.data for p in parts], axis=axis)
    except ValueError:
        raise ShapeMismatchError("concat", *(p.shape for p in parts)) from None
    ax = axis % data.ndim
    bounds = np.cumsum([0] + [p.shape[ax] for p in parts])

    def vjp(g: Tensor) -> list[Tensor]:
        grads = []
        for start, stop in zip(bounds[:-1], bounds[1:], strict=True):
            key = (slice(None),) * ax + (slice(int(start), int(stop)),)
            grads.append(index(g, key))
        return grads

    return make_result(data, parts, vjp, "concat")


def pad2d(x: Any, pad_h: int, pad_w: int) -> Tensor:
    """Zero-pad the spatial axes of an NHWC tensor."""
    x = as_tensor(x)
    n, h, w, c = x.shape
    key = (slice(None), slice(pad_h, pad_h + h), slice(pad_w, pad_w + w), slice(None))
    return scatter(x, key, (n, h + 2 * pad_h, w + 2 * pad_w, c))


# ---------------------------------------------------------------------------
# Linear algebra
# ---------------------------------------------------------------------------


def matmul(a: Any, b: Any) -> Tensor:
    """2-D matrix product."""
    a, b = as_tensor(a), as_tensor(b)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeMismatchError("matmul", a.shape, b.shape)

    def vjp(g: Tensor) -> tuple[Tensor, Tensor]:
        return matmul(g, transpose(b)), matmul(transpose(a), g)

    return make_result(a.data @ b.data, (a, b), vjp, "matmul")


def extract_patches(x: Any, kh: int, kw: int) -> Tensor:
    """Valid-mode sliding windows: (N, H, W, C) -> (N, H-kh+1, W-kw+1, kh, kw, C)."""
    x = as_tensor(x)
    windows = sliding_window_view(x.data, (kh, kw), axis=(1, 2))
    data = np.ascontiguousarray(windows.transpose(0, 1, 2, 4, 5, 3))
    return make_result(
        data, (x,), lambda g: (fold_patches(g, x.shape),), "extract_patches"
    )


def fold_patches(cols: Any, shape: Sequence[int]) -> Tensor:
    """Adjoint of ``extract_patches``: sum windows back into an image."""
    cols = as_tensor(cols)
    _, out_h, out_w, kh, kw, _ = cols.shape
    out = np.zeros(tuple(shape), dtype=cols.dtype)
    for i in range(kh):
        for j in range(kw):
            out[:, i : i + out_h, j : j + out_w, :] += cols.data[:, :, :, i, j, :]
    return make_result(
        out, (cols,), lambda g: (extract_patches(g, kh, kw),), "fold_patches"
    )


def conv2d(x: Any, weight: Tensor, bias: Tensor | None = None) -> Tensor:
    """Stride-1, same-padded convolution.

    Args:
        x: Input of shape (N, H, W, C_in).
        weight: Kernel of shape (kh, kw, C_in, C_out), odd kh and kw.
        bias: Optional (C_out,) bias.

    Returns:
        Output of shape (N, H, W, C_out).
    """
    x = as_tensor(x)
    if x.ndim != 4 or weight.ndim != 4 or x.shape[3] != weight.shape[2]:
        raise ShapeMismatchError("conv2d", x.shape, weight.shape)
    kh, kw, c_in, c_out = weight.shape
    if kh % 2 == 0 or kw % 2 == 0:
        raise ShapeMismatchError("conv2d", x.shape, weight.shape)
    n, h, w, _ = x.shape
    if kh == 1 and kw == 1:
        cols = reshape(x, (n * h * w, c_in))
    else:
        padded = pad2d(x, kh // 2, kw // 2)
        cols = reshape(extract_patches(padded, kh, kw), (n * h * w, kh * kw * c_in))
    out = matmul(cols, reshape(weight, (kh * kw * c_in, c_out)))
    if bias is not None:
        out = add(out, bias)
    return reshape(out, (n, h, w, c_out))


def dense(x: Any, weight: Tensor, bias: Tensor | None = None) -> Tensor:
    """Fully connected layer on (N, D_in) inputs."""
    out = matmul(x, weight)
    return out if bias is None else add(out, bias)


# ---------------------------------------------------------------------------
# Resampling
# ---------------------------------------------------------------------------


def upsample2x2(x: Any) -> Tensor:
    """Nearest-neighbor (box) upsampling of an NHWC tensor by 2 on H and W."""
    x = as_tensor(x)
    if x.ndim != 4:
        raise ShapeMismatchError("upsample2x2", x.shape)
    n, h, w, c = x.shape
    expanded = broadcast_to(reshape(x, (n, h, 1, w, 1, c)), (n, h, 2, w, 2, c))
    return reshape(expanded, (n, 2 * h, 2 * w, c))


def downsample2x2(x: Any) -> Tensor:
    """2x2 mean pooling of an NHWC tensor."""
    x = as_tensor(x)
    if x.ndim != 4 or x.shape[1] % 2 or x.shape[2] % 2:
        raise ShapeMismatchError("downsample2x2", x.shape)
    n, h, w, c = x.shape
    blocks = reshape(x, (n, h // 2, 2, w // 2, 2, c))
    return reduce_mean(blocks, axis=(2, 4))


# ---------------------------------------------------------------------------
# Normalization and losses
# ---------------------------------------------------------------------------


def pixel_norm(x: Any, epsilon: float = PIXEL_NORM_EPSILON) -> Tensor:
    """Divide each position's channel vector by its RMS."""
    x = as_tensor(x)
    mean_square = reduce_mean(mul(x, x), axis=-1, keepdims=True)
    return mul(x, power(add(mean_square, epsilon), -0.5))


def minibatch_stddev(x: Any, epsilon: float = MINIBATCH_STD_EPSILON) -> Tensor:
    """Append the batch-averaged cross-example stddev as one extra channel.

    The stddev is the population stddev over the batch at each (h, w, c),
    averaged over all positions and channels into a single scalar that is
    broadcast to an (N, H, W, 1) channel.
    """
    x = as_tensor(x)
    if x.ndim != 4:
        raise ShapeMismatchError("minibatch_stddev", x.shape)
    n, h, w, _ = x.shape
    centered = sub(x, reduce_mean(x, axis=0, keepdims=True))
    variance = reduce_mean(mul(centered, centered), axis=0)
    stddev = reduce_mean(sqrt(add(variance, epsilon)))
    feature = broadcast_to(reshape(stddev, (1, 1, 1, 1)), (n, h, w, 1))
    return concat([x, feature], axis=-1)


def log_softmax(logits: Any, axis: int = -1) -> Tensor:
    logits = as_tensor(logits)
    peak = Tensor(logits.data.max(axis=axis, keepdims=True), dtype=logits.dtype)
    shifted = sub(logits, peak)
    return sub(shifted, log(reduce_sum(exp(shifted), axis=axis, keepdims=True)))


def softmax(logits: Any, axis: int = -1) -> Tensor:
    return exp(log_softmax(logits, axis=axis))


def softmax_cross_entropy(logits: Any, labels: np.ndarray) -> Tensor:
    """Mean cross-entropy of (N, K) logits against class indices or one-hots.

    Args:
        logits: Unnormalized scores, shape (N, K).
        labels: Integer class ids of shape (N,), or (N, K) one-hot rows.

    Returns:
        Scalar mean loss.
    """
    logits = as_tensor(logits)
    labels = np.asarray(labels)
    if logits.ndim != 2:
        raise ShapeMismatchError("softmax_cross_entropy", logits.shape, labels.shape)
    n, k = logits.shape
    if labels.ndim == 1:
        if labels.shape[0] != n:
            raise ShapeMismatchError("softmax_cross_entropy", logits.shape, labels.shape)
        targets = np.zeros((n, k), dtype=logits.dtype)
        targets[np.arange(n), labels.astype(int)] = 1.0
    elif labels.shape == (n, k):
        targets = labels.astype(logits.dtype)
    else:
        raise ShapeMismatchError("softmax_cross_entropy", logits.shape, labels.shape)
    picked = reduce_sum(mul(log_softmax(logits), targets), axis=1)
    return neg(reduce_mean(picked))
