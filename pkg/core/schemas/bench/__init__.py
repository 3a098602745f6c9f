"""Benchmark schemas."""

from core.schemas.bench.latency_report import LatencyMeasurement, LatencyReport

__all__ = ["LatencyMeasurement", "LatencyReport"]
