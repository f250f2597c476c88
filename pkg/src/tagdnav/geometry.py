"""Shared 2D geometry: points, poses, rigid transforms, angle arithmetic.

Frame convention (used everywhere in this package): the robot-centric frame
has +x pointing along the robot heading and +y to the robot's left; angles
are measured counter-clockwise from +x and normalized to [-pi, pi).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_angle(theta: float) -> float:
    """Normalize an angle to [-pi, pi)."""
    return (theta + math.pi) % TWO_PI - math.pi


def wrap_angles(theta: np.ndarray) -> np.ndarray:
    """Vectorized `wrap_angle`."""
    return (np.asarray(theta, dtype=float) + math.pi) % TWO_PI - math.pi


def angle_diff(a: float, b: float) -> float:
    """Signed circular difference a - b, in [-pi, pi)."""
    return wrap_angle(a - b)


@dataclass(frozen=True)
class Point2:
    """Cartesian 2D point in meters."""

    x: float
    y: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=float)

    @staticmethod
    def from_array(arr) -> "Point2":
        return Point2(float(arr[0]), float(arr[1]))

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class PolarPoint:
    """Range/bearing pair; r in meters (>= 0), theta in [-pi, pi)."""

    r: float
    theta: float

    def to_cartesian(self) -> Point2:
        return polar_to_cartesian(self)


def polar_to_cartesian(p: PolarPoint) -> Point2:
    return Point2(p.r * math.cos(p.theta), p.r * math.sin(p.theta))


def cartesian_to_polar(p: Point2) -> PolarPoint:
    return PolarPoint(math.hypot(p.x, p.y), wrap_angle(math.atan2(p.y, p.x)))


@dataclass(frozen=True)
class RigidTransform2:
    """Proper rigid motion of the plane: rotation about the origin, then translation.

    `compose` follows function composition: (T1 @ T2)(p) = T1(T2(p)).
    """

    rotation: float
    translation: tuple[float, float]

    def __post_init__(self):
        object.__setattr__(self, "rotation", wrap_angle(float(self.rotation)))
        tx, ty = self.translation
        object.__setattr__(self, "translation", (float(tx), float(ty)))

    @staticmethod
    def identity() -> "RigidTransform2":
        return RigidTransform2(0.0, (0.0, 0.0))

    def apply(self, p: Point2) -> Point2:
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        tx, ty = self.translation
        return Point2(c * p.x - s * p.y + tx, s * p.x + c * p.y + ty)

    def apply_array(self, pts: np.ndarray) -> np.ndarray:
        """Transform an (N, 2) array of points."""
        pts = np.asarray(pts, dtype=float)
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        tx, ty = self.translation
        out = np.empty_like(pts)
        out[..., 0] = c * pts[..., 0] - s * pts[..., 1] + tx
        out[..., 1] = s * pts[..., 0] + c * pts[..., 1] + ty
        return out

    def compose(self, other: "RigidTransform2") -> "RigidTransform2":
        """Return the transform equivalent to applying `other` first, then self."""
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        ox, oy = other.translation
        tx, ty = self.translation
        return RigidTransform2(
            self.rotation + other.rotation,
            (c * ox - s * oy + tx, s * ox + c * oy + ty),
        )

    def inverse(self) -> "RigidTransform2":
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        tx, ty = self.translation
        return RigidTransform2(-self.rotation, (-(c * tx + s * ty), s * tx - c * ty))


@dataclass(frozen=True)
class Pose2:
    """World-frame pose; heading normalized to [-pi, pi)."""

    x: float
    y: float
    heading: float

    def __post_init__(self):
        object.__setattr__(self, "heading", wrap_angle(float(self.heading)))

    @property
    def position(self) -> Point2:
        return Point2(self.x, self.y)

    def position_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=float)

    def world_from_robot(self) -> RigidTransform2:
        """Transform mapping robot-frame coordinates into the world frame."""
        return RigidTransform2(self.heading, (self.x, self.y))

    def robot_from_world(self) -> RigidTransform2:
        return self.world_from_robot().inverse()
