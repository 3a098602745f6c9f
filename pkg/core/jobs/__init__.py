"""Thread-pool jobs: corpus rendering, batch encoding and batch prefetching."""
