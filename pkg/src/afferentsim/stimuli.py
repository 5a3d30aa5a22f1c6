"""Parametric stimulus geometry.

Stimuli are rigid height fields over the contact plane. Ridge/bar tops define
z = 0 and grooves sit at negative depth, so press depth is always measured
against the highest surface. Three kinds exist:

* ``flat``      -- an unbounded plane at z = 0.
* ``periodic``  -- an unbounded square-wave grating (50% duty cycle).
* ``aperiodic`` -- a finite run of alternating bars and gaps extruded along
  the bar axis, flanked by unbounded free space on both sides.

Free space is reported as ``-inf``: nothing to contact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import yaml

FREE_SPACE = -math.inf


@dataclass(frozen=True)
class StimulusProfile:
    """Queryable height field for one stimulus.

    ``elements`` alternate bar/gap widths in mm starting and ending with a
    bar (aperiodic only). ``orientation_deg`` rotates the pattern about the
    contact normal: at 0 the bars/grooves run along y and the wave axis is x.
    Boundary queries resolve to the lower of the two adjacent heights (a pin
    balanced on a knife edge slides into the gap).
    """

    kind: str
    elements: tuple[float, ...] = ()
    period_mm: float = 0.0
    groove_depth_mm: float = 0.0
    orientation_deg: float = 0.0
    origin_mm: tuple[float, float] = (0.0, 0.0)
    name: str = ""

    def __post_init__(self):
        if self.kind not in ("flat", "aperiodic", "periodic"):
            raise ValueError(f"unknown stimulus kind {self.kind!r}")
        if self.groove_depth_mm < 0:
            raise ValueError("groove depth must be >= 0")
        if self.kind == "periodic" and self.period_mm < 0:
            raise ValueError("period must be >= 0")
        if self.kind == "aperiodic":
            if len(self.elements) == 0:
                raise ValueError("aperiodic profile needs at least one bar")
            if any(w <= 0 for w in self.elements):
                raise ValueError("bar/gap widths must be > 0")

    # -- geometry queries ---------------------------------------------------

    def _axis_coord(self, x, y):
        """Signed coordinate along the wave axis (perpendicular to bars)."""
        a = math.radians(self.orientation_deg)
        ox, oy = self.origin_mm
        return math.cos(a) * (np.asarray(x, float) - ox) + math.sin(a) * (
            np.asarray(y, float) - oy
        )

    def height_at(self, x, y):
        """Surface height (mm, <= 0) at the query points; -inf in free space.

        Accepts scalars or arrays; broadcasts like numpy.
        """
        x = np.asarray(x, float)
        y = np.asarray(y, float)
        if self.kind == "flat":
            out = np.zeros(np.broadcast(x, y).shape)
            return out if out.shape else float(out)

        t = self._axis_coord(x, y)
        if self.kind == "periodic":
            if self.period_mm == 0.0:
                out = np.zeros_like(t)
            else:
                phase = np.mod(t / self.period_mm, 1.0)
                ridge = (phase > 0.0) & (phase < 0.5)
                out = np.where(ridge, 0.0, -self.groove_depth_mm)
            return out if out.shape else float(out)

        # aperiodic: elements centred on the origin along the wave axis
        widths = np.asarray(self.elements, float)
        total = widths.sum()
        bounds = np.cumsum(widths)  # right edge of each element
        s = t + total / 2.0
        idx = np.searchsorted(bounds, s, side="right")
        idx_c = np.clip(idx, 0, len(widths) - 1)
        left = bounds[idx_c] - widths[idx_c]
        right = bounds[idx_c]
        inside = (s > 0.0) & (s < total)
        on_bar = inside & (idx_c % 2 == 0) & (s > left) & (s < right)
        out = np.where(inside, np.where(on_bar, 0.0, -self.groove_depth_mm), FREE_SPACE)
        return out if out.shape else float(out)

    def contact_height_at(self, x, y, tip_radius_mm: float = 0.0):
        """Constraint height for the centre of a ball-shaped pin tip.

        The reachable surface for a spherical tip of radius ``tip_radius_mm``
        is the stimulus dilated by the ball (profilometer kinematics): on a
        ridge the tip rides at 0, past a ridge corner it rolls off along a
        quarter-circle, and in wide gaps it rests on the floor. Grooves much
        narrower than the tip are geometrically unreachable, which is the
        sensor's spatial low-pass. A zero radius reduces to :meth:`height_at`.
        """
        if tip_radius_mm <= 0.0 or self.kind == "flat":
            return self.height_at(x, y)
        x = np.asarray(x, float)
        y = np.asarray(y, float)
        t = self._axis_coord(x, y)
        rho = float(tip_radius_mm)

        if self.kind == "periodic":
            if self.period_mm == 0.0:
                out = np.zeros_like(t)
                return out if out.shape else float(out)
            phase = np.mod(t / self.period_mm, 1.0)
            # axis distance to the ridge interval (0, P/2)
            dist = np.where(
                phase < 0.5, 0.0,
                np.minimum(phase - 0.5, 1.0 - phase) * self.period_mm,
            )
            ball = np.where(
                dist < rho,
                np.sqrt(np.maximum(rho * rho - dist * dist, 0.0)) - rho,
                -np.inf,
            )
            out = np.maximum(ball, -self.groove_depth_mm)
            return out if out.shape else float(out)

        widths = np.asarray(self.elements, float)
        total = widths.sum()
        bounds = np.concatenate([[0.0], np.cumsum(widths)])
        s = t + total / 2.0
        # distance to the nearest bar interval
        dist = np.full(np.shape(s), np.inf)
        for i in range(0, len(widths), 2):
            lo, hi = bounds[i], bounds[i + 1]
            dist = np.minimum(dist, np.maximum(lo - s, 0.0) + np.maximum(s - hi, 0.0))
        ball = np.where(
            dist < rho,
            np.sqrt(np.maximum(rho * rho - dist * dist, 0.0)) - rho,
            -np.inf,
        )
        floor = np.where((s > 0.0) & (s < total), -self.groove_depth_mm, FREE_SPACE)
        out = np.maximum(ball, floor)
        return out if out.shape else float(out)

    def extent_mm(self):
        """(lo, hi) of the stimulus along its wave axis, or None if unbounded."""
        if self.kind != "aperiodic":
            return None
        half = sum(self.elements) / 2.0
        return (-half, half)

    def bar_edges_mm(self):
        """Axis coordinates of every bar edge (aperiodic only)."""
        if self.kind != "aperiodic":
            raise ValueError("bar edges are defined for aperiodic profiles only")
        widths = np.asarray(self.elements, float)
        bounds = np.concatenate([[0.0], np.cumsum(widths)]) - widths.sum() / 2.0
        edges = []
        for i in range(len(widths)):
            if i % 2 == 0:  # bar
                edges.extend([bounds[i], bounds[i + 1]])
        return np.asarray(edges)


def make_flat_plate(name: str = "flat") -> StimulusProfile:
    """Unbounded flat plate at z = 0."""
    return StimulusProfile(kind="flat", name=name)


def make_periodic_grating(
    period_mm: float,
    depth_mm: float = 1.5,
    orientation_deg: float = 0.0,
    name: str = "",
) -> StimulusProfile:
    """Square-wave grating: half-period ridge at 0, half-period groove at -depth.

    ``period_mm == 0`` degenerates to a flat plate (the smooth control).
    """
    if period_mm < 0:
        raise ValueError("period must be >= 0")
    if depth_mm < 0:
        raise ValueError("depth must be >= 0")
    return StimulusProfile(
        kind="periodic",
        period_mm=float(period_mm),
        groove_depth_mm=float(depth_mm),
        orientation_deg=float(orientation_deg),
        name=name or f"periodic_{period_mm:g}mm",
    )


def make_aperiodic_grating(
    elements,
    depth_mm: float = 1.5,
    orientation_deg: float = 0.0,
    name: str = "",
) -> StimulusProfile:
    """Finite bar/gap run (widths in mm, bars first), free space beyond."""
    elements = tuple(float(w) for w in elements)
    if len(elements) == 0:
        raise ValueError("element list must be non-empty")
    if any(w <= 0 for w in elements):
        raise ValueError("bar/gap widths must be > 0")
    return StimulusProfile(
        kind="aperiodic",
        elements=elements,
        groove_depth_mm=float(depth_mm),
        orientation_deg=float(orientation_deg),
        name=name,
    )


# -- catalogue ---------------------------------------------------------------

#: Periods used by the grating-resolution experiment, plus the 0 mm control.
PERIODIC_PERIODS_MM = (0.0, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0)


@dataclass(frozen=True)
class GratingCatalogue:
    """Named stimulus set shared by all experiments.

    ``aperiodic_set`` holds the seven ridged sweep stimuli, ``periodic_set``
    the eight square-wave gratings (periods 0-5 mm). ``extras`` are additional
    named profiles (isolated bars, the flat plate).
    """

    aperiodic_set: tuple[StimulusProfile, ...]
    periodic_set: tuple[StimulusProfile, ...]
    extras: tuple[StimulusProfile, ...] = field(default_factory=tuple)

    def __iter__(self):
        yield from self.aperiodic_set
        yield from self.periodic_set
        yield from self.extras

    def get(self, name: str) -> StimulusProfile:
        for profile in self:
            if profile.name == name:
                return profile
        raise KeyError(name)

    def names(self):
        return [p.name for p in self]


def load_catalogue(path) -> GratingCatalogue:
    """Load a catalogue from a YAML config file.

    Schema::

        depth_mm: 1.5
        aperiodic:
          - {name: grating1, elements: [1.0, 10.0, 1.0]}
        periodic_periods_mm: [0, 1, 1.5, 2, 2.5, 3, 4, 5]
        extras:
          - {name: bar4, elements: [4.0]}
    """
    with open(path) as fh:
        raw = yaml.safe_load(fh)
    depth = float(raw.get("depth_mm", 1.5))
    aperiodic = tuple(
        make_aperiodic_grating(
            entry["elements"], depth_mm=float(entry.get("depth_mm", depth)),
            name=entry["name"],
        )
        for entry in raw.get("aperiodic", [])
    )
    periodic = tuple(
        make_periodic_grating(float(p), depth_mm=depth)
        for p in raw.get("periodic_periods_mm", PERIODIC_PERIODS_MM)
    )
    extras = [make_flat_plate()]
    for entry in raw.get("extras", []):
        extras.append(
            make_aperiodic_grating(
                entry["elements"], depth_mm=float(entry.get("depth_mm", depth)),
                name=entry["name"],
            )
        )
    return GratingCatalogue(aperiodic, periodic, tuple(extras))


def default_catalogue() -> GratingCatalogue:
    """Catalogue from the packaged config file."""
    from importlib.resources import files

    return load_catalogue(files("afferentsim.data") / "stimuli.yaml")
