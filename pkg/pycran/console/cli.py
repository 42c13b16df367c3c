#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The entry point for the pycran CLI."""

import click

from .commands.sim.sim import compare, run, sweep


@click.group()
@click.pass_context
def cli(ctx: click.Context):
    """Simulate JT-CoMP clustering in a C-RAN from a simple to use CLI.

    pycran runs a system level simulation of a downlink network of remote
    radio heads serving NOMA users with zero-forcing beams, where the radio
    heads cooperate in clusters chosen by a merge and split coalition game
    or by one of the static, greedy or no cooperation baselines. Results
    are written as comma separated tables for plotting elsewhere.
    """


cli.add_command(run)
cli.add_command(sweep)
cli.add_command(compare)
