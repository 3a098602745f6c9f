"""Metric schemas."""

from core.schemas.metrics.metric_report import REPORT_COLUMNS, MetricReport

__all__ = ["REPORT_COLUMNS", "MetricReport"]
