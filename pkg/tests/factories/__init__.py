"""Factory classes for test data generation."""

import factory
from faker import Faker

from core.constants.audio import ATTACK_SECONDS, MIDI_HIGH, MIDI_LOW
from core.schemas.dataset import NoteRecord, TimbreParams
from core.schemas.gan import LossReport

fake = Faker()


class TimbreParamsFactory(factory.Factory):
    """Factory for TimbreParams with a short decaying harmonic series."""

    class Meta:
        model = TimbreParams

    harmonic_amplitudes = factory.LazyFunction(
        lambda: [1.0 / k for k in range(1, fake.random_int(min=3, max=12) + 1)]
    )
    decay_rate = factory.LazyFunction(lambda: fake.pyfloat(min_value=0.2, max_value=3.0))
    attack = ATTACK_SECONDS
    inharmonicity = 0.0
    detune_cents = 0.0


class NoteRecordFactory(factory.Factory):
    """Factory for NoteRecord rows of a manifest."""

    class Meta:
        model = NoteRecord

    id = factory.Sequence(lambda n: f"note_{n:05d}")
    pitch = factory.LazyFunction(lambda: fake.random_int(min=MIDI_LOW, max=MIDI_HIGH))
    waveform_path = factory.LazyAttribute(lambda o: f"wav/{o.id}.wav")
    timbre_seed = factory.LazyFunction(lambda: fake.random_int(min=0, max=2**31 - 1))
    note_seed = factory.LazyFunction(lambda: fake.random_int(min=0, max=2**31 - 1))


class LossReportFactory(factory.Factory):
    """Factory for per-step loss reports."""

    class Meta:
        model = LossReport

    step = factory.Sequence(lambda n: n)
    stage = 0
    alpha = 1.0
    d_loss = factory.LazyFunction(lambda: fake.pyfloat(min_value=-5, max_value=5))
    g_loss = factory.LazyFunction(lambda: fake.pyfloat(min_value=-5, max_value=5))
    gp = factory.LazyFunction(lambda: fake.pyfloat(min_value=0, max_value=1))
    acgan_real = 4.1
    acgan_fake = 4.1
    wasserstein = 0.0
    examples_seen = factory.LazyAttribute(lambda o: (o.step + 1) * 8)
