#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The physical layer of a resource block.

For each RB, every RRH pairs its scheduled users into NOMA clusters, steers
one zero-forcing beam per cluster and splits the beam power between the
cluster members with FTPC. When JT-CoMP is active, edge users additionally
join a cluster of every cooperating RRH. The SINR of each user is then
evaluated per subcarrier, with and without JT-CoMP.
"""

from pycran.phy.beamforming import BeamSet, zf_beamformers
from pycran.phy.cluster import NomaCluster, RbAllocation, apply_comp, assign_comp_beams, build_rb_allocation
from pycran.phy.pairing import correlation_metric, pair_noma_users
from pycran.phy.power import beam_power, ftpc_coefficients
from pycran.phy.sinr import SinrBreakdown, received_beam_gains, sinr_comp, sinr_no_comp

__all__ = [
    "BeamSet",
    "NomaCluster",
    "RbAllocation",
    "SinrBreakdown",
    "apply_comp",
    "assign_comp_beams",
    "beam_power",
    "build_rb_allocation",
    "correlation_metric",
    "ftpc_coefficients",
    "pair_noma_users",
    "received_beam_gains",
    "sinr_comp",
    "sinr_no_comp",
    "zf_beamformers",
]
