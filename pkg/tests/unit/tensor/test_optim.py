"""Tests for the ADAM optimizer."""

import numpy as np
import pytest

from core.exceptions import ShapeMismatchError
from core.tensor import AdamState, Tensor, adam_step


class TestAdamStep:
    """Test cases for ``adam_step``."""

    def test_first_step_moves_by_learning_rate(self):
        """Test that bias correction makes the first update equal to lr."""
        param = Tensor(np.zeros(3), requires_grad=True)
        state = AdamState(learning_rate=0.01)

        adam_step({"w": param}, {"w": np.array([0.5, -2.0, 3.0])}, state)

        np.testing.assert_allclose(param.data, [-0.01, 0.01, -0.01], rtol=1e-5)

    def test_step_counter_increments_once_per_call(self):
        params = {"a": Tensor(np.ones(2)), "b": Tensor(np.ones(1))}
        state = AdamState()

        adam_step(params, {"a": np.ones(2), "b": np.ones(1)}, state)
        adam_step(params, {"a": np.ones(2), "b": np.ones(1)}, state)

        assert state.step == 2

    def test_missing_gradient_counts_as_zero(self):
        param = Tensor(np.ones(2))
        state = AdamState()

        adam_step({"w": param}, {"w": None}, state)

        np.testing.assert_array_equal(param.data, np.ones(2))
        np.testing.assert_array_equal(state.m["w"], np.zeros(2))

    def test_gradient_shape_mismatch_is_rejected(self):
        with pytest.raises(ShapeMismatchError):
            adam_step({"w": Tensor(np.ones(2))}, {"w": np.ones(3)}, AdamState())

    def test_defaults_disable_momentum(self):
        state = AdamState()

        assert state.beta1 == 0.0
        assert state.beta2 == 0.99

    def test_restore_continues_identically(self):
        """Test that a restored state produces the same next update."""
        grads = [np.array([0.3, -0.1]), np.array([-0.2, 0.4]), np.array([0.1, 0.1])]
        original = Tensor(np.zeros(2))
        state = AdamState(learning_rate=0.1, beta1=0.5)
        for g in grads[:2]:
            adam_step({"w": original}, {"w": g}, state)
        restored_state = AdamState.restore(state.hyperparameters(), state.buffers())
        restored = Tensor(original.data.copy())

        adam_step({"w": original}, {"w": grads[2]}, state)
        adam_step({"w": restored}, {"w": grads[2]}, restored_state)

        np.testing.assert_array_equal(original.data, restored.data)
