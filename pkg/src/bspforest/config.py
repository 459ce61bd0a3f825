"""Shared tree-growing configuration."""

from dataclasses import dataclass


@dataclass(frozen=True)
class TreeConfig:
    """Knobs shared by the batch and online partition samplers.

    min_points_to_cut: a node is split only while it holds more points
        than this (guards against trivially small blocks).
    rate_scale: multiplier on the perimeter-sum rate of the exponential
        cut-cost clock (1.0 = plain perimeter sum; 0.5 = half).
    enforce_domain: reject observed features outside [0, 1]^d.
    max_cut_retries: resampling budget when a sampled cut fails to
        separate the member points (floating-point degeneracy guard).
    """

    min_points_to_cut: int = 3
    rate_scale: float = 1.0
    enforce_domain: bool = False
    max_cut_retries: int = 16
