"""Custom exceptions raised by the spectral GAN pipeline."""

from collections.abc import Sequence


class SynthesisError(Exception):
    """Base exception for pipeline errors."""

    def __init__(
        self,
        message: str,
        component: str | None = None,
        exit_code: int = 1,
    ):
        """Initialize pipeline error.

        Args:
            message: Error message
            component: Name of the module that raised the error
            exit_code: Process exit code the CLI should report
        """
        self.component = component
        self.exit_code = exit_code
        super().__init__(message)


class InvalidWaveformError(SynthesisError):
    """Waveform is empty, too short for one frame, or not finite."""

    def __init__(self, message: str):
        super().__init__(message=message, component="spectral")


class ShapeMismatchError(SynthesisError):
    """Operands of an operation have incompatible shapes."""

    def __init__(
        self, op: str, *shapes: Sequence[int], component: str = "tensor"
    ):
        """Initialize shape mismatch error.

        Args:
            op: Name of the operation that rejected its operands
            *shapes: The offending shapes, in operand order
            component: Module that performed the operation
        """
        self.op = op
        self.shapes = [tuple(s) for s in shapes]
        rendered = ", ".join(str(s) for s in self.shapes)
        super().__init__(
            message=f"{op}: incompatible shapes {rendered}",
            component=component,
        )


class UnfittedNormalizationError(SynthesisError):
    """Encoding was attempted before normalization stats were fitted."""

    def __init__(self):
        super().__init__(
            message=(
                "Representation config has no normalization stats; "
                "fit them with fit_normalization() first"
            ),
            component="spectral",
        )


class InvalidImageError(SynthesisError):
    """Spectral image contains non-finite or out-of-range values."""

    def __init__(self, message: str):
        super().__init__(message=message, component="spectral")


class PitchOutOfRangeError(SynthesisError):
    """MIDI pitch outside the supported [24, 84] range."""

    def __init__(self, pitch: int, low: int = 24, high: int = 84):
        """Initialize pitch range error.

        Args:
            pitch: The rejected MIDI pitch
            low: Lowest supported pitch
            high: Highest supported pitch
        """
        self.pitch = pitch
        super().__init__(
            message=f"MIDI pitch {pitch} outside supported range [{low}, {high}]",
            component="dataio",
            exit_code=2,
        )


class DatasetError(SynthesisError):
    """Corpus generation or manifest I/O failed."""

    def __init__(self, message: str, path: str | None = None):
        """Initialize dataset error.

        Args:
            message: Error message
            path: File or directory the failure relates to
        """
        self.path = path
        full = f"{message} (path: {path})" if path else message
        super().__init__(message=full, component="dataio")


class ArtifactNotFoundError(SynthesisError):
    """A required input file (WAV, image, checkpoint, manifest) is missing."""

    def __init__(self, path: str, kind: str = "artifact"):
        """Initialize missing artifact error.

        Args:
            path: Path that was looked up
            kind: Human-readable artifact type for the message
        """
        self.path = path
        super().__init__(
            message=f"{kind} not found: {path}",
            component="cli",
            exit_code=2,
        )


class TrainingDivergedError(SynthesisError):
    """A training loss became NaN or infinite."""

    def __init__(self, step: int, snapshot_path: str | None = None):
        """Initialize divergence error.

        Args:
            step: Training step at which the non-finite loss appeared
            snapshot_path: Where the diagnostic snapshot was written
        """
        self.step = step
        self.snapshot_path = snapshot_path
        message = f"Non-finite loss at step {step}"
        if snapshot_path:
            message += f"; diagnostic snapshot written to {snapshot_path}"
        super().__init__(message=message, component="gan")


class MetricInputError(SynthesisError):
    """Inputs to an evaluation metric are degenerate or malformed."""

    def __init__(self, message: str):
        super().__init__(message=message, component="metrics")


class ConfigurationError(SynthesisError):
    """A configuration value is inconsistent or unsupported."""

    def __init__(self, message: str, component: str | None = None):
        super().__init__(message=message, component=component, exit_code=2)


class InvalidLatentError(SynthesisError):
    """A latent vector is zero, mis-shaped or not finite."""

    def __init__(self, message: str):
        super().__init__(message=message, component="gan")
