"""Quasi-static skin simulator.

The sensing face is a slightly convex dome carrying a 19x19 lattice of stiff
pin tips whose markers are imaged in the plane of the camera. Contact with a
rigid stimulus is resolved per frame by minimising a discrete elastic energy

    E = stretch(lattice springs) + bending(displacement Laplacian)
        + anchor(restoring pull toward the rigidly posed rest shape)

subject to non-penetration of every pin tip against the stimulus height
field. The minimiser is found by projected gradient descent with heavy-ball
momentum, a fixed iteration budget and an energy-change tolerance, so results
are deterministic for fixed inputs. Presses are simulated as sequences of
static solves along a trapezoidal depth schedule; camera jitter is added to
the observed marker positions afterwards from per-frame seed substreams.

Coordinates: the stimulus lives in the world frame with ridge tops at z = 0.
Marker observations are reported in the sensor (camera) frame, so a press at
any pose yields zero displacement until contact.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .stimuli import StimulusProfile

DEFAULT_MAX_ITER = 2000
DEFAULT_TOL = 1e-8  # energy units
_CONTACT_EPS = 1e-9  # mm


class SolverError(RuntimeError):
    """Contact solve did not converge within the iteration budget."""

    def __init__(self, residual: float, frame_index: int | None = None):
        self.residual = residual
        self.frame_index = frame_index
        where = "" if frame_index is None else f" at frame {frame_index}"
        super().__init__(
            f"contact solver did not converge{where} (residual {residual:.3e})"
        )


@dataclass(eq=False)
class SensorGeometry:
    """Marker lattice on the dome-shaped sensing face.

    The rest shape is a paraboloid: the apex (grid centre) protrudes
    ``dome_height_mm`` below the corner markers, which define the rim. Rest
    marker positions are the projected square grid seen by the camera.
    """

    grid_shape: tuple[int, int] = (19, 19)
    pitch_mm: float = 1.2
    dome_height_mm: float = 2.0
    tip_radius_mm: float = 0.5

    def __post_init__(self):
        rows, cols = self.grid_shape
        if rows < 2 or cols < 2 or self.pitch_mm <= 0:
            raise ValueError("grid must be at least 2x2 with positive pitch")
        ys = (np.arange(rows) - (rows - 1) / 2.0) * self.pitch_mm
        xs = (np.arange(cols) - (cols - 1) / 2.0) * self.pitch_mm
        gx, gy = np.meshgrid(xs, ys)
        radius = np.hypot(gx, gy)
        self.reference_radius_mm = float(radius.max())
        dome = self.dome_height_mm * (radius / self.reference_radius_mm) ** 2
        # rest positions: (rows, cols, 3), apex at z=0, rim at +dome_height
        self.rest_grid = np.stack([gx, gy, dome], axis=-1)
        self.rest_xy = self.rest_grid[..., :2].reshape(-1, 2).copy()
        # spring rest lengths follow the dome metric
        self.rest_len_h = np.linalg.norm(
            self.rest_grid[:, 1:] - self.rest_grid[:, :-1], axis=-1
        )
        self.rest_len_v = np.linalg.norm(
            self.rest_grid[1:, :] - self.rest_grid[:-1, :], axis=-1
        )
        self.rest_len_d1 = np.linalg.norm(
            self.rest_grid[1:, 1:] - self.rest_grid[:-1, :-1], axis=-1
        )
        self.rest_len_d2 = np.linalg.norm(
            self.rest_grid[1:, :-1] - self.rest_grid[:-1, 1:], axis=-1
        )
        deg = np.full((rows, cols), 4.0)
        deg[0, :] -= 1.0
        deg[-1, :] -= 1.0
        deg[:, 0] -= 1.0
        deg[:, -1] -= 1.0
        self.neighbor_degree = deg

    @property
    def n_markers(self) -> int:
        return self.grid_shape[0] * self.grid_shape[1]

    @property
    def active_area_mm2(self) -> float:
        # one pitch-square cell per marker
        rows, cols = self.grid_shape
        return rows * self.pitch_mm * cols * self.pitch_mm

    @property
    def marker_density_per_cm2(self) -> float:
        return self.n_markers / (self.active_area_mm2 / 100.0)

    @property
    def center_index(self) -> tuple[int, int]:
        return (self.grid_shape[0] // 2, self.grid_shape[1] // 2)


@dataclass(frozen=True)
class SkinParameters:
    """Mechanical and noise constants of the skin model.

    ``in_plane_stiffness`` is the lattice spring constant; the anchor
    (dome restoring) stiffness is ``contact_stiffness_ratio`` times it and
    the bending penalty is a dimensionless multiple. ``noise_sigma_mm`` is
    the per-frame, per-axis jitter of observed marker positions. Defaults
    are calibration constants, frozen after one-time tuning.
    """

    in_plane_stiffness: float = 1.0
    bending_penalty: float = 0.4
    contact_stiffness_ratio: float = 0.09
    noise_sigma_mm: float = 0.005
    squeeze_coupling: float = 0.05  # 1/mm, gel Poisson effect

    def __post_init__(self):
        if self.in_plane_stiffness <= 0:
            raise ValueError("in_plane_stiffness must be > 0")
        if self.bending_penalty < 0 or self.contact_stiffness_ratio <= 0:
            raise ValueError("stiffness weights must be positive")
        if self.noise_sigma_mm < 0:
            raise ValueError("noise_sigma_mm must be >= 0")
        if self.squeeze_coupling < 0:
            raise ValueError("squeeze_coupling must be >= 0")

    @property
    def k_spring(self) -> float:
        return self.in_plane_stiffness

    @property
    def k_anchor(self) -> float:
        return self.in_plane_stiffness * self.contact_stiffness_ratio

    @property
    def k_bend(self) -> float:
        return self.in_plane_stiffness * self.bending_penalty


@dataclass(frozen=True)
class Pose:
    """Sensor pose relative to the stimulus.

    ``yaw_deg`` spins the marker grid about the sensor axis (the label in the
    orientation task); roll/pitch are small tilts; x/y slide the sensor over
    the stimulus; z_mm adds to the commanded indentation.
    """

    yaw_deg: float = 0.0
    roll_deg: float = 0.0
    pitch_deg: float = 0.0
    x_mm: float = 0.0
    y_mm: float = 0.0
    z_mm: float = 0.0

    def rotation(self) -> np.ndarray:
        cy, sy = math.cos(math.radians(self.yaw_deg)), math.sin(math.radians(self.yaw_deg))
        cp, sp = math.cos(math.radians(self.pitch_deg)), math.sin(math.radians(self.pitch_deg))
        cr, sr = math.cos(math.radians(self.roll_deg)), math.sin(math.radians(self.roll_deg))
        rz = np.array([[cy, -sy, 0.0], [sy, cy, 0.0], [0.0, 0.0, 1.0]])
        ry = np.array([[cp, 0.0, sp], [0.0, 1.0, 0.0], [-sp, 0.0, cp]])
        rx = np.array([[1.0, 0.0, 0.0], [0.0, cr, -sr], [0.0, sr, cr]])
        return rx @ ry @ rz


@dataclass(frozen=True)
class PressTrajectory:
    """Trapezoidal press schedule: approach, hold, optional release."""

    start_clearance_mm: float = 2.0
    max_indentation_mm: float = 2.5
    approach_speed_mm_s: float = 3.0
    hold_duration_s: float = 3.0
    frame_rate_hz: float = 10.0
    include_release: bool = True

    def __post_init__(self):
        if self.max_indentation_mm <= 0:
            raise ValueError("max_indentation_mm must be > 0")
        if self.approach_speed_mm_s <= 0:
            raise ValueError("approach_speed_mm_s must be > 0")
        if self.frame_rate_hz <= 0:
            raise ValueError("frame_rate_hz must be > 0")
        if self.start_clearance_mm < 0:
            raise ValueError("start_clearance_mm must be >= 0")

    def times_s(self) -> np.ndarray:
        t_press = (self.start_clearance_mm + self.max_indentation_mm) / self.approach_speed_mm_s
        total = t_press + self.hold_duration_s
        if self.include_release:
            total += t_press
        n = int(round(total * self.frame_rate_hz)) + 1
        return np.arange(n) / self.frame_rate_hz

    def depth_at(self, t) -> np.ndarray:
        """Commanded indentation (mm) vs time; negative while above surface."""
        t = np.asarray(t, float)
        t_press = (self.start_clearance_mm + self.max_indentation_mm) / self.approach_speed_mm_s
        t_hold_end = t_press + self.hold_duration_s
        depth = -self.start_clearance_mm + self.approach_speed_mm_s * t
        depth = np.minimum(depth, self.max_indentation_mm)
        if self.include_release:
            rel = self.max_indentation_mm - self.approach_speed_mm_s * (t - t_hold_end)
            depth = np.where(t > t_hold_end, np.maximum(rel, -self.start_clearance_mm), depth)
        return depth

    def phase_marks(self) -> dict[str, int]:
        """Frame indices of press start, hold start, release start and end."""
        t = self.times_s()
        t_press = (self.start_clearance_mm + self.max_indentation_mm) / self.approach_speed_mm_s
        t_hold_end = t_press + self.hold_duration_s
        marks = {
            "press_start": 0,
            "hold_start": int(np.searchsorted(t, t_press - 1e-12)),
            "end": len(t) - 1,
        }
        if self.include_release:
            marks["release_start"] = int(np.searchsorted(t, t_hold_end + 1e-12))
        else:
            marks["release_start"] = len(t) - 1
        return marks


@dataclass
class MarkerField:
    """Observed marker state for one frame (sensor/camera frame).

    ``positions`` are the 2D marker positions after any jitter; ``rest`` is a
    reference to the geometry's rest grid. ``tip_positions_world`` keeps the
    solver's internal 3D state for energy evaluation and feasibility checks.
    """

    frame_index: int
    positions: np.ndarray  # (n_markers, 2)
    rest: np.ndarray  # (n_markers, 2), shared reference
    in_contact: np.ndarray  # (n_markers,) bool
    tip_positions_world: np.ndarray | None = None  # (n_markers, 3)

    @property
    def displacement(self) -> np.ndarray:
        return self.positions - self.rest


# -- posing -------------------------------------------------------------------


def posed_rest(
    geometry: SensorGeometry, pose: Pose, indentation_mm: float
) -> tuple[np.ndarray, float]:
    """World-frame rest tip positions at the given pose and indentation.

    The sensor is lowered so its lowest rest tip sits ``indentation + pose.z``
    below the ridge-top plane (z = 0). Returns (rest tips (r, c, 3),
    effective indentation).
    """
    eff = indentation_mm + pose.z_mm
    r = pose.rotation()
    w = geometry.rest_grid @ r.T
    w[..., 0] += pose.x_mm
    w[..., 1] += pose.y_mm
    w[..., 2] += -eff - w[..., 2].min()
    return w, eff


# -- energy and solver ----------------------------------------------------------


def _laplacian(u: np.ndarray, degree: np.ndarray) -> np.ndarray:
    """Graph Laplacian of a (..., rows, cols, 3) field with free boundaries."""
    out = -degree[..., None] * u
    out[..., 1:, :, :] += u[..., :-1, :, :]
    out[..., :-1, :, :] += u[..., 1:, :, :]
    out[..., :, 1:, :] += u[..., :, :-1, :]
    out[..., :, :-1, :] += u[..., :, 1:, :]
    return out


def _energy_terms(p, w, geometry, params, want_grad=True):
    """Batch elastic energy and (optionally) its gradient.

    ``p``/``w`` have shape (B, rows, cols, 3); returns (E (B,), grad or None).
    """
    k_s, k_a, k_b = params.k_spring, params.k_anchor, params.k_bend
    bsz = p.shape[0]

    def per_item_sum(arr):
        return arr.reshape(bsz, -1).sum(axis=1)

    u = p - w
    energy = 0.5 * k_a * per_item_sum(u * u)
    grad = k_a * u if want_grad else None

    # normal compression of the gel dilates local spring rest lengths
    gamma = params.squeeze_coupling
    comp = np.maximum(p[..., 2] - w[..., 2], 0.0)

    springs = (
        ((slice(None), slice(None), slice(1, None)),
         (slice(None), slice(None), slice(None, -1)), geometry.rest_len_h),
        ((slice(None), slice(1, None), slice(None)),
         (slice(None), slice(None, -1), slice(None)), geometry.rest_len_v),
        ((slice(None), slice(1, None), slice(1, None)),
         (slice(None), slice(None, -1), slice(None, -1)), geometry.rest_len_d1),
        ((slice(None), slice(1, None), slice(None, -1)),
         (slice(None), slice(None, -1), slice(1, None)), geometry.rest_len_d2),
    )
    for hi, lo, rest_len in springs:
        d = p[hi] - p[lo]
        length = np.maximum(np.sqrt((d * d).sum(axis=-1)), 1e-12)
        c_hi = comp[hi]
        c_lo = comp[lo]
        l_eff = rest_len * (1.0 + 0.5 * gamma * (c_hi + c_lo))
        stretch = length - l_eff
        energy += 0.5 * k_s * per_item_sum(stretch * stretch)
        if want_grad:
            f = (k_s * stretch / length)[..., None] * d
            grad[hi] += f
            grad[lo] -= f
            if gamma > 0:
                zpull = k_s * stretch * rest_len * (0.5 * gamma)
                grad[hi][..., 2] -= zpull * (c_hi > 0)
                grad[lo][..., 2] -= zpull * (c_lo > 0)

    # plate-like bending: penalise curvature of the vertical deflection only
    lap = _laplacian(u[..., 2:], geometry.neighbor_degree)
    energy += 0.5 * k_b * per_item_sum(lap * lap)
    if want_grad:
        grad[..., 2:] += k_b * _laplacian(lap, geometry.neighbor_degree)
    return energy, grad


def _project_tips(p, stimulus, tip_radius):
    """Clamp tip heights onto/above the contact surface, in place."""
    h = stimulus.contact_height_at(p[..., 0], p[..., 1], tip_radius)
    np.maximum(p[..., 2], h, out=p[..., 2])
    return p


_LIFT_CAP = 0.05  # mm, max surface climb per iteration


def _advance_tips(p_old, p_cand, stimulus, tip_radius):
    """Contact-aware step: pins cannot teleport up through steep walls.

    A candidate position below the local contact surface is resolved by
    lifting the pin onto it, which lets pins climb the rounded shoulders of
    the tip-dilated surface. When the required lift exceeds the per-step cap
    (a near-vertical wall, e.g. the side of the outermost bar) the lateral
    move is blocked instead and the pin stays in its previous column, pressed
    against the wall. Returns (next positions, blocked mask).
    """
    h_old = stimulus.contact_height_at(p_old[..., 0], p_old[..., 1], tip_radius)
    h_new = stimulus.contact_height_at(p_cand[..., 0], p_cand[..., 1], tip_radius)
    standing = np.maximum(p_old[..., 2], h_old)
    blocked = (h_new - standing) > _LIFT_CAP
    p_next = p_cand.copy()
    p_next[..., 0] = np.where(blocked, p_old[..., 0], p_cand[..., 0])
    p_next[..., 1] = np.where(blocked, p_old[..., 1], p_cand[..., 1])
    floor = np.where(blocked, h_old, h_new)
    p_next[..., 2] = np.maximum(p_cand[..., 2], floor)
    return p_next, blocked


def _step_size(params: SkinParameters) -> float:
    # conservative inverse Lipschitz bound for the energy gradient
    return 1.0 / (params.k_anchor + 22.0 * params.k_spring + 64.0 * params.k_bend)


def solve_contact_batch(
    geometry: SensorGeometry,
    params: SkinParameters,
    stimulus: StimulusProfile,
    rests: np.ndarray,
    warm: np.ndarray | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOL,
):
    """Solve a batch of independent contact problems in lockstep.

    ``rests`` is (B, rows, cols, 3) of posed rest tips. Returns
    (tips (B, rows, cols, 3), converged (B,) bool, residuals (B,)).
    Each item's iterate sequence is identical to a single-item solve, so
    batched and serial collection agree bit for bit.
    """
    rests = np.asarray(rests, float)
    bsz = rests.shape[0]
    p = rests.copy() if warm is None else warm.copy()
    rho = geometry.tip_radius_mm
    _project_tips(p, stimulus, rho)
    eta = _step_size(params)
    momentum = 0.9
    check_every = 10

    out = np.empty_like(p)
    residual = np.full(bsz, np.inf)
    converged = np.zeros(bsz, dtype=bool)
    active = np.arange(bsz)
    vel = np.zeros_like(p)
    e_prev, _ = _energy_terms(p, rests, geometry, params, want_grad=False)
    settled = np.zeros(bsz, dtype=int)  # consecutive quiet check windows
    scale = np.ones(bsz)  # per-item step damping near oscillatory kinks
    w = rests

    it = 0
    while it < max_iter and len(active):
        it += 1
        _, g = _energy_terms(p, w, geometry, params)
        vel = momentum * vel - (eta * scale)[:, None, None, None] * g
        p_next, blocked = _advance_tips(p, p + vel, stimulus, rho)
        if blocked.any():
            vel[blocked] = 0.0
        p = p_next
        if it % check_every == 0 or it == max_iter:
            e_now, _ = _energy_terms(p, w, geometry, params, want_grad=False)
            rose = e_now > e_prev + np.maximum(1e-9 * np.abs(e_prev), tol)
            if rose.any():
                vel[rose] = 0.0
                scale[rose] = np.maximum(scale[rose] * 0.7, 0.02)
            delta = np.abs(e_now - e_prev)
            # quench ringing in soft modes once progress is nearly done
            slow = delta <= 1000.0 * tol
            if slow.any():
                vel[slow] *= 0.5
            settled = np.where(delta <= tol, settled + 1, 0)
            done = settled >= 2
            e_prev = e_now
            if done.any():
                out[active[done]] = p[done]
                residual[active[done]] = delta[done]
                converged[active[done]] = True
                keep = ~done
                active = active[keep]
                p, vel, w = p[keep], vel[keep], w[keep]
                e_prev, settled, scale = e_prev[keep], settled[keep], scale[keep]
    if len(active):
        e_now, _ = _energy_terms(p, w, geometry, params, want_grad=False)
        out[active] = p
        residual[active] = np.abs(e_now - e_prev)
    return out, converged, residual


def solve_contact(
    geometry: SensorGeometry,
    params: SkinParameters,
    stimulus: StimulusProfile,
    pose: Pose,
    indentation_mm: float,
    warm: np.ndarray | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOL,
    frame_index: int = 0,
) -> MarkerField:
    """Resolve one static contact; deterministic, noise-free.

    Raises :class:`SolverError` if the energy has not settled within the
    iteration budget.
    """
    if indentation_mm < 0:
        raise ValueError("indentation must be >= 0")
    w, eff = posed_rest(geometry, pose, indentation_mm)
    tips, ok, residual = solve_contact_batch(
        geometry, params, stimulus, w[None], warm=None if warm is None else warm[None],
        max_iter=max_iter, tol=tol,
    )
    if not ok[0]:
        raise SolverError(float(residual[0]), frame_index)
    return _field_from_tips(tips[0], geometry, params, stimulus, pose, eff, frame_index)


def _field_from_tips(tips, geometry, params, stimulus, pose, eff, frame_index,
                     rng=None) -> MarkerField:
    flat = tips.reshape(-1, 3)
    h = stimulus.contact_height_at(flat[:, 0], flat[:, 1], geometry.tip_radius_mm)
    in_contact = np.isfinite(h) & (flat[:, 2] - h <= _CONTACT_EPS)
    # camera view: undo the rigid pose applied by posed_rest, keep x/y
    r = pose.rotation()
    rigid = geometry.rest_grid @ r.T
    shift = np.array([
        pose.x_mm,
        pose.y_mm,
        (-eff - rigid[..., 2].min()),
    ])
    local = (flat - shift) @ r
    positions = local[:, :2].copy()
    if rng is not None and params.noise_sigma_mm > 0:
        positions += rng.normal(0.0, params.noise_sigma_mm, positions.shape)
    return MarkerField(
        frame_index=frame_index,
        positions=positions,
        rest=geometry.rest_xy,
        in_contact=in_contact,
        tip_positions_world=flat.copy(),
    )


def energy(
    geometry: SensorGeometry,
    params: SkinParameters,
    fld: MarkerField,
    stimulus: StimulusProfile,
    pose: Pose,
    indentation_mm: float,
) -> float:
    """Elastic energy of a marker field under the given contact scenario.

    Uses the field's internal 3D tip state when present; otherwise lifts the
    2D positions onto the posed rest heights clamped to feasibility.
    """
    w, _ = posed_rest(geometry, pose, indentation_mm)
    if fld.tip_positions_world is not None:
        tips = fld.tip_positions_world.reshape(geometry.grid_shape + (3,))
    else:
        rows, cols = geometry.grid_shape
        r = pose.rotation()
        rigid = geometry.rest_grid @ r.T
        shift = np.array([pose.x_mm, pose.y_mm,
                          -(indentation_mm + pose.z_mm) - rigid[..., 2].min()])
        local = np.concatenate(
            [fld.positions, geometry.rest_grid[..., 2].reshape(-1, 1)], axis=1
        )
        tips = (local @ r.T + shift).reshape(rows, cols, 3)
        _project_tips(tips, stimulus, geometry.tip_radius_mm)
    e, _ = _energy_terms(tips[None], w[None], geometry, params, want_grad=False)
    return float(e[0])


# -- press simulation -----------------------------------------------------------


def frame_noise_rng(seed: int, frame_index: int) -> np.random.Generator:
    """Deterministic per-frame jitter substream."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(frame_index,)))
    )


def simulate_press(
    geometry: SensorGeometry,
    params: SkinParameters,
    stimulus: StimulusProfile,
    pose: Pose,
    trajectory: PressTrajectory,
    seed: int = 0,
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOL,
) -> list[MarkerField]:
    """Simulate a full press; returns one MarkerField per scheduled frame."""
    fields = simulate_press_batch(
        geometry, params, stimulus, [pose], trajectory, [seed],
        max_iter=max_iter, tol=tol,
    )[0]
    return fields


def simulate_press_batch(
    geometry: SensorGeometry,
    params: SkinParameters,
    stimulus: StimulusProfile,
    poses,
    trajectory: PressTrajectory,
    seeds,
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOL,
) -> list[list[MarkerField]]:
    """Simulate many independent presses of the same stimulus in lockstep.

    Every press follows the same schedule; poses and noise streams differ.
    Output is exactly what per-press :func:`simulate_press` would produce.
    """
    poses = list(poses)
    seeds = list(seeds)
    if len(seeds) != len(poses):
        raise ValueError("one seed per pose required")
    depths = trajectory.depth_at(trajectory.times_s())
    bsz = len(poses)
    rows, cols = geometry.grid_shape

    results: list[list[MarkerField]] = [[] for _ in range(bsz)]
    warm = None
    prev_w = None
    for k, depth in enumerate(depths):
        w = np.empty((bsz, rows, cols, 3))
        effs = np.empty(bsz)
        for i, pose in enumerate(poses):
            w[i], effs[i] = posed_rest(geometry, pose, float(depth))
        if warm is not None:
            warm = warm + (w - prev_w)  # carry deformation along the schedule
        tips, ok, residual = solve_contact_batch(
            geometry, params, stimulus, w, warm=warm, max_iter=max_iter, tol=tol
        )
        if not ok.all():
            bad = int(np.flatnonzero(~ok)[0])
            raise SolverError(float(residual[bad]), k)
        warm, prev_w = tips, w
        for i, pose in enumerate(poses):
            rng = frame_noise_rng(seeds[i], k) if params.noise_sigma_mm > 0 else None
            results[i].append(
                _field_from_tips(tips[i], geometry, params, stimulus, pose,
                                 float(effs[i]), k, rng=rng)
            )
    return results


# -- frame export ----------------------------------------------------------------


def export_frames_csv(frames, geometry: SensorGeometry, path) -> None:
    """Write a frame sequence as CSV: frame, marker_row, marker_col, x_mm, y_mm."""
    rows, cols = geometry.grid_shape
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["frame", "marker_row", "marker_col", "x_mm", "y_mm"])
        for fld in frames:
            pos = fld.positions.reshape(rows, cols, 2)
            for r in range(rows):
                for c in range(cols):
                    writer.writerow([
                        fld.frame_index, r, c,
                        f"{pos[r, c, 0]:.9f}", f"{pos[r, c, 1]:.9f}",
                    ])
