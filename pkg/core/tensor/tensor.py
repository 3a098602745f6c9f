"""Dense numpy-backed tensors with a reverse-mode autodiff graph.

Every op that produces a Tensor from inputs requiring gradients records its
parents and a vector-Jacobian product (VJP) closure. VJP closures are written
with Tensor ops themselves, so differentiating with ``create_graph=True``
records a second graph through the backward pass. That second graph is what
the gradient penalty backpropagates through.
"""

from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
import structlog

from core.exceptions import ShapeMismatchError
from core.tensor.modes import default_dtype, is_grad_enabled, set_grad_enabled

logger = structlog.get_logger(__name__)

VJP = Callable[["Tensor"], Sequence["Tensor | None"]]


class Tensor:
    """A float array plus an optional handle into the autodiff graph.

    Attributes:
        data: The values, always a floating numpy array.
        requires_grad: Whether gradients flow to (or through) this tensor.
        grad: Gradient written by ``backward`` for leaves, else None.
        name: Optional label, used for parameters.
    """

    __slots__ = ("_op", "_parents", "_vjp", "data", "grad", "name", "requires_grad")

    # Make ndarray <op> Tensor dispatch to Tensor's reflected operators
    __array_priority__ = 100.0

    def __init__(
        self,
        data: Any,
        requires_grad: bool = False,
        name: str | None = None,
        dtype: np.dtype | str | None = None,
    ):
        self.data = np.asarray(data, dtype=dtype or default_dtype())
        self.requires_grad = requires_grad
        self.grad: np.ndarray | None = None
        self.name = name
        self._parents: tuple[Tensor, ...] = ()
        self._vjp: VJP | None = None
        self._op: str | None = None

    def __repr__(self) -> str:
        label = f", name={self.name!r}" if self.name else ""
        op = f", op={self._op}" if self._op else ""
        return (
            f"Tensor(shape={self.shape}, dtype={self.data.dtype}, "
            f"requires_grad={self.requires_grad}{label}{op})"
        )

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def ndim(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return self.data.size

    @property
    def dtype(self) -> np.dtype:
        return self.data.dtype

    @property
    def is_leaf(self) -> bool:
        """True for tensors not produced by a recorded op."""
        return self._vjp is None

    def numpy(self) -> np.ndarray:
        return self.data

    def item(self) -> float:
        if self.data.size != 1:
            raise ShapeMismatchError("item", self.shape, ())
        return float(self.data.reshape(-1)[0])

    def detach(self) -> "Tensor":
        """Same values, cut from the graph."""
        return Tensor(self.data, dtype=self.data.dtype)

    # Arithmetic delegates to ops so every path records the same VJPs

    def __add__(self, other: Any) -> "Tensor":
        return ops.add(self, other)

    def __radd__(self, other: Any) -> "Tensor":
        return ops.add(other, self)

    def __sub__(self, other: Any) -> "Tensor":
        return ops.sub(self, other)

    def __rsub__(self, other: Any) -> "Tensor":
        return ops.sub(other, self)

    def __mul__(self, other: Any) -> "Tensor":
        return ops.mul(self, other)

    def __rmul__(self, other: Any) -> "Tensor":
        return ops.mul(other, self)

    def __truediv__(self, other: Any) -> "Tensor":
        return ops.div(self, other)

    def __rtruediv__(self, other: Any) -> "Tensor":
        return ops.div(other, self)

    def __neg__(self) -> "Tensor":
        return ops.neg(self)

    def __pow__(self, exponent: float) -> "Tensor":
        return ops.power(self, exponent)

    def __matmul__(self, other: "Tensor") -> "Tensor":
        return ops.matmul(self, other)

    def __getitem__(self, key: Any) -> "Tensor":
        return ops.index(self, key)

    def sum(self, axis: int | tuple[int, ...] | None = None, keepdims: bool = False) -> "Tensor":
        return ops.reduce_sum(self, axis=axis, keepdims=keepdims)

    def mean(self, axis: int | tuple[int, ...] | None = None, keepdims: bool = False) -> "Tensor":
        return ops.reduce_mean(self, axis=axis, keepdims=keepdims)

    def reshape(self, *shape: int | tuple[int, ...]) -> "Tensor":
        target = shape[0] if len(shape) == 1 and isinstance(shape[0], tuple) else shape
        return ops.reshape(self, target)

    @property
    def T(self) -> "Tensor":  # noqa: N802
        return ops.transpose(self)


def as_tensor(value: Any) -> Tensor:
    """Wrap constants (scalars, arrays) as non-differentiable tensors."""
    if isinstance(value, Tensor):
        return value
    if isinstance(value, np.ndarray) and np.issubdtype(value.dtype, np.floating):
        return Tensor(value, dtype=value.dtype)
    return Tensor(value)


def make_result(
    data: np.ndarray, parents: Sequence[Tensor], vjp: VJP, op: str
) -> Tensor:
    """Create an op output, recording the graph edge when needed.

    Args:
        data: Forward values.
        parents: Op inputs, in the order the VJP returns their gradients.
        vjp: Maps the output gradient to one gradient (or None) per parent.
        op: Op name, for diagnostics.

    Returns:
        The output tensor.
    """
    out = Tensor(data, dtype=data.dtype)
    if is_grad_enabled() and any(p.requires_grad for p in parents):
        out.requires_grad = True
        out._parents = tuple(parents)
        out._vjp = vjp
        out._op = op
    return out


def _topological_order(root: Tensor) -> list[Tensor]:
    """Nodes reachable from ``root`` that require grad, parents first.

    Iterative so deep graphs don't hit the recursion limit.
    """
    order: list[Tensor] = []
    visited: set[int] = set()
    stack: list[tuple[Tensor, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in visited or not node.requires_grad:
            continue
        visited.add(id(node))
        stack.append((node, True))
        for parent in node._parents:
            if id(parent) not in visited:
                stack.append((parent, False))
    return order


def _propagate(
    output: Tensor, seed: Tensor, create_graph: bool
) -> tuple[list[Tensor], dict[int, Tensor]]:
    order = _topological_order(output)
    grads: dict[int, Tensor] = {id(output): seed}
    with set_grad_enabled(create_graph):
        for node in reversed(order):
            g = grads.get(id(node))
            if g is None or node._vjp is None:
                continue
            parent_grads = node._vjp(g)
            for parent, pg in zip(node._parents, parent_grads, strict=True):
                if pg is None or not parent.requires_grad:
                    continue
                if pg.shape != parent.shape:
                    raise ShapeMismatchError(
                        f"backward({node._op})", pg.shape, parent.shape
                    )
                key = id(parent)
                grads[key] = pg if key not in grads else grads[key] + pg
    return order, grads


def grad(
    output: Tensor,
    inputs: Sequence[Tensor],
    grad_output: Tensor | None = None,
    create_graph: bool = False,
) -> list[Tensor]:
    """Gradients of ``output`` with respect to ``inputs``.

    Args:
        output: Tensor to differentiate; scalar unless ``grad_output`` is given.
        inputs: Tensors to differentiate with respect to (leaves or interior).
        grad_output: Cotangent for a non-scalar output.
        create_graph: Record the backward pass so the returned gradients are
            themselves differentiable.

    Returns:
        One gradient tensor per input; zeros for inputs the output does not
        depend on.

    Raises:
        ShapeMismatchError: If the output is non-scalar without a cotangent.
    """
    if grad_output is None:
        if output.size != 1:
            raise ShapeMismatchError("grad", output.shape, ())
        seed = Tensor(np.ones_like(output.data), dtype=output.dtype)
    else:
        if grad_output.shape != output.shape:
            raise ShapeMismatchError("grad", output.shape, grad_output.shape)
        seed = grad_output
    _, grads = _propagate(output, seed, create_graph)
    return [
        grads.get(id(x), Tensor(np.zeros_like(x.data), dtype=x.dtype))
        for x in inputs
    ]


def backward(loss: Tensor) -> dict[Tensor, np.ndarray]:
    """Populate ``.grad`` of every leaf the scalar ``loss`` depends on.

    Gradients are written, not accumulated, so repeated calls on the same
    graph give identical results.

    Args:
        loss: Scalar tensor.

    Returns:
        Mapping of each participating leaf to its gradient array.

    Raises:
        ShapeMismatchError: If ``loss`` is not a scalar.
    """
    if loss.size != 1:
        raise ShapeMismatchError("backward", loss.shape, ())
    seed = Tensor(np.ones_like(loss.data), dtype=loss.dtype)
    order, grads = _propagate(loss, seed, create_graph=False)
    leaves: dict[Tensor, np.ndarray] = {}
    for node in order:
        if node.is_leaf:
            g = grads.get(id(node))
            node.grad = (
                np.zeros_like(node.data) if g is None else np.ascontiguousarray(g.data)
            )
            leaves[node] = node.grad
    logger.debug("Backward pass complete", nodes=len(order), leaves=len(leaves))
    return leaves


# ops builds on Tensor; imported last to break the cycle
from core.tensor import ops  # noqa: E402
