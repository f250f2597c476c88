"""Lidar-to-velocity navigation pipeline: TAGD perception, spatiotemporal
attention actor-critic, DDPG training, and a randomized dynamic indoor
simulator."""

__version__ = "0.1.0"
