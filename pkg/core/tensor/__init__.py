"""Reverse-mode autodiff tensors, layers and the ADAM optimizer."""

from core.tensor import ops
from core.tensor.checkpoint import load_tensors, save_tensors
from core.tensor.gradcheck import gradient_error
from core.tensor.layers import Conv2d, Dense, Module
from core.tensor.modes import (
    default_dtype,
    is_grad_enabled,
    no_grad,
    precision,
    set_grad_enabled,
)
from core.tensor.optim import AdamState, adam_step
from core.tensor.tensor import Tensor, as_tensor, backward, grad

__all__ = [
    "AdamState",
    "Conv2d",
    "Dense",
    "Module",
    "Tensor",
    "adam_step",
    "as_tensor",
    "backward",
    "default_dtype",
    "grad",
    "gradient_error",
    "is_grad_enabled",
    "load_tensors",
    "no_grad",
    "ops",
    "precision",
    "save_tensors",
    "set_grad_enabled",
]
