"""Model, optimizer and training-schedule constants."""

# Generator input
LATENT_DIM = 256

# Per-stage channel counts at full scale, lowest resolution first
CHANNEL_SCHEDULE = (256, 256, 256, 256, 128, 64, 32)
CANONICAL_STAGE_COUNT = 7
HIRES_BASE_SHAPE = (2, 16)
LOWRES_BASE_SHAPE = (4, 8)

# Nonlinearities and normalization
LEAKY_RELU_SLOPE = 0.2
PIXEL_NORM_EPSILON = 1e-8
MINIBATCH_STD_EPSILON = 1e-8

# Optimizer (progressive-GAN convention)
LEARNING_RATE = 8e-4
ADAM_BETA1 = 0.0
ADAM_BETA2 = 0.99
ADAM_EPSILON = 1e-8

# Loss weights
ACGAN_WEIGHT = 10.0
GP_WEIGHT = 10.0

# Schedule (examples per phase at full scale)
BATCH_SIZE = 8
BLEND_EXAMPLES = 800_000
STABILIZE_EXAMPLES = 800_000

# Evaluation
NDB_CLUSTERS = 50
NDB_SIGNIFICANCE = 0.05
NDB_POOL = 4
FID_REGULARIZATION = 1e-6
