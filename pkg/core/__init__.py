"""Spectral GAN audio synthesis: codecs, corpus, GAN, classifier and metrics."""
