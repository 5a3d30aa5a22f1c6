"""Afferent transduction: marker frames to tactile images.

Two channels are derived from the observed 2D marker positions only, matching
the optical measurement principle:

* SA-I -- magnitude of each marker's in-plane displacement from rest (mm);
  sustained under static contact.
* RA-I -- each marker's in-plane speed between consecutive frames (mm/s);
  nonzero only while the contact changes. The derivative is a raw one-frame
  difference, no smoothing.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

from .skin import MarkerField, SensorGeometry

CONTRAST_EPS = 1e-9

SA1 = "SA1"
RA1 = "RA1"


class MarkerCSVError(ValueError):
    """Malformed marker trajectory file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = "" if line is None else f" (line {line})"
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class TactileImage:
    """One 19x19 map of non-negative afferent responses."""

    kind: str
    values: np.ndarray
    frame_index: int = 0

    def __post_init__(self):
        if self.kind not in (SA1, RA1):
            raise ValueError(f"unknown afferent kind {self.kind!r}")


@dataclass(frozen=True)
class AfferentSeries:
    """Per-frame SA-I and RA-I images for one press.

    The RA-I sequence is one image shorter than the frame count, since speeds
    need a frame pair.
    """

    sa1: tuple[TactileImage, ...]
    ra1: tuple[TactileImage, ...]
    dt_s: float

    def __post_init__(self):
        if self.dt_s <= 0:
            raise ValueError("dt_s must be > 0")
        if len(self.ra1) != max(len(self.sa1) - 1, 0):
            raise ValueError("ra1 length must be frame count - 1")


def sa1_image(frame: MarkerField, grid_shape=(19, 19)) -> TactileImage:
    """Displacement-magnitude image of one frame."""
    disp = frame.displacement
    values = np.linalg.norm(disp, axis=1).reshape(grid_shape)
    return TactileImage(kind=SA1, values=values, frame_index=frame.frame_index)


def ra1_image(frame_t: MarkerField, frame_prev: MarkerField, dt_s: float,
              grid_shape=(19, 19)) -> TactileImage:
    """Speed image between two consecutive frames."""
    if dt_s <= 0:
        raise ValueError("dt_s must be > 0")
    step = frame_t.positions - frame_prev.positions
    values = np.linalg.norm(step, axis=1).reshape(grid_shape) / dt_s
    return TactileImage(kind=RA1, values=values, frame_index=frame_t.frame_index)


def series_from_frames(frames, dt_s: float, grid_shape=(19, 19)) -> AfferentSeries:
    """Transduce a full press into SA-I and RA-I image sequences."""
    frames = list(frames)
    sa = tuple(sa1_image(f, grid_shape) for f in frames)
    ra = tuple(
        ra1_image(frames[i], frames[i - 1], dt_s, grid_shape)
        for i in range(1, len(frames))
    )
    return AfferentSeries(sa1=sa, ra1=ra, dt_s=dt_s)


def total_response(image: TactileImage) -> float:
    """Sum of all cell responses."""
    return float(image.values.sum())


def spatial_contrast(image: TactileImage) -> float:
    """Coefficient of variation of cell values: std / (mean + eps)."""
    values = image.values
    return float(values.std() / (values.mean() + CONTRAST_EPS))


def peak_frame(series: AfferentSeries, kind: str) -> TactileImage:
    """Image of the requested kind with the largest total response.

    Ties break toward the earliest frame.
    """
    images = series.sa1 if kind == SA1 else series.ra1 if kind == RA1 else None
    if images is None:
        raise ValueError(f"unknown afferent kind {kind!r}")
    if not images:
        raise ValueError("series is empty")
    totals = np.array([img.values.sum() for img in images])
    return images[int(np.argmax(totals))]


# -- external marker trajectories ------------------------------------------------


def ingest_marker_csv(path, dt_s: float, rest: np.ndarray | None = None,
                      grid_shape=(19, 19)) -> AfferentSeries:
    """Build an AfferentSeries from a recorded marker trajectory file.

    The file must match the frame-sequence export schema
    (frame, marker_row, marker_col, x_mm, y_mm). The first frame is taken as
    the rest configuration unless ``rest`` (n_markers, 2) is supplied.
    """
    n_expected = grid_shape[0] * grid_shape[1]
    frames_raw: dict[int, dict[tuple[int, int], tuple[float, float]]] = {}
    order: list[int] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:5]] != [
            "frame", "marker_row", "marker_col", "x_mm", "y_mm",
        ]:
            raise MarkerCSVError("missing or wrong header", line=1)
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                idx = int(row[0])
                r, c = int(row[1]), int(row[2])
                x, y = float(row[3]), float(row[4])
            except (ValueError, IndexError):
                raise MarkerCSVError("malformed row", line=lineno) from None
            if not (0 <= r < grid_shape[0] and 0 <= c < grid_shape[1]):
                raise MarkerCSVError(f"marker ({r},{c}) outside grid", line=lineno)
            if idx not in frames_raw:
                if order and idx <= order[-1]:
                    raise MarkerCSVError(
                        f"non-monotone frame index {idx}", line=lineno)
                frames_raw[idx] = {}
                order.append(idx)
            if (r, c) in frames_raw[idx]:
                raise MarkerCSVError(f"duplicate marker ({r},{c})", line=lineno)
            frames_raw[idx][(r, c)] = (x, y)
    if not order:
        raise MarkerCSVError("file contains no frames")
    for idx in order:
        if len(frames_raw[idx]) != n_expected:
            raise MarkerCSVError(
                f"frame {idx} has {len(frames_raw[idx])} markers, "
                f"expected {n_expected}")

    def frame_array(idx):
        out = np.empty((n_expected, 2))
        for (r, c), (x, y) in frames_raw[idx].items():
            out[r * grid_shape[1] + c] = (x, y)
        return out

    rest_arr = frame_array(order[0]) if rest is None else np.asarray(rest, float)
    if rest_arr.shape != (n_expected, 2):
        raise MarkerCSVError("rest frame has wrong shape")
    fields = [
        MarkerField(
            frame_index=idx,
            positions=frame_array(idx),
            rest=rest_arr,
            in_contact=np.zeros(n_expected, dtype=bool),
        )
        for idx in order
    ]
    return series_from_frames(fields, dt_s, grid_shape)


# -- image export ------------------------------------------------------------------


def image_to_csv(image: TactileImage, path) -> None:
    """19 rows x 19 columns of raw responses."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row in image.values:
            writer.writerow([f"{v:.9g}" for v in row])


def image_to_pgm(image: TactileImage, path, sidecar_path=None) -> None:
    """ASCII PGM scaled to the image's own max, plus a JSON scale sidecar."""
    values = image.values
    vmax = float(values.max())
    scale = vmax if vmax > 0 else 1.0
    pixels = np.round(values / scale * 255).astype(int)
    rows, cols = values.shape
    with open(path, "w") as fh:
        fh.write(f"P2\n{cols} {rows}\n255\n")
        for row in pixels:
            fh.write(" ".join(str(v) for v in row) + "\n")
    sidecar = {
        "kind": image.kind,
        "frame_index": image.frame_index,
        "value_at_255": scale,
        "units": "mm" if image.kind == SA1 else "mm/s",
    }
    if sidecar_path is None:
        sidecar_path = str(path) + ".json"
    with open(sidecar_path, "w") as fh:
        json.dump(sidecar, fh, indent=2, sort_keys=True)
        fh.write("\n")
