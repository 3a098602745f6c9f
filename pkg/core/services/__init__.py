"""Services for the core app.

Each subpackage implements one stage of the pipeline: spectral codecs,
corpus generation, the GAN, the pitch classifier and evaluation metrics.
Import from the subpackages directly.
"""
