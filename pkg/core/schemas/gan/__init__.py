"""GAN schemas."""

from core.schemas.gan.gan_config import GanConfig
from core.schemas.gan.loss_report import LOSS_CSV_COLUMNS, LossReport
from core.schemas.gan.schedule_state import ScheduleState
from core.schemas.gan.train_schedule import TrainSchedule

__all__ = [
    "LOSS_CSV_COLUMNS",
    "GanConfig",
    "LossReport",
    "ScheduleState",
    "TrainSchedule",
]
