"""Artificial SA-I/RA-I tactile afferents on a simulated marker-grid sensor."""

from .stimuli import (
    GratingCatalogue,
    StimulusProfile,
    default_catalogue,
    load_catalogue,
    make_aperiodic_grating,
    make_flat_plate,
    make_periodic_grating,
)
from .skin import (
    MarkerField,
    Pose,
    PressTrajectory,
    SensorGeometry,
    SkinParameters,
    SolverError,
    energy,
    simulate_press,
    solve_contact,
)
from .afferents import (
    RA1,
    SA1,
    AfferentSeries,
    TactileImage,
    ingest_marker_csv,
    peak_frame,
    ra1_image,
    sa1_image,
    series_from_frames,
    spatial_contrast,
    total_response,
)

__version__ = "0.1.0"

__all__ = [
    "AfferentSeries",
    "GratingCatalogue",
    "MarkerField",
    "Pose",
    "PressTrajectory",
    "RA1",
    "SA1",
    "SensorGeometry",
    "SkinParameters",
    "SolverError",
    "StimulusProfile",
    "TactileImage",
    "default_catalogue",
    "energy",
    "ingest_marker_csv",
    "load_catalogue",
    "make_aperiodic_grating",
    "make_flat_plate",
    "make_periodic_grating",
    "peak_frame",
    "ra1_image",
    "sa1_image",
    "series_from_frames",
    "simulate_press",
    "solve_contact",
    "spatial_contrast",
    "total_response",
]
