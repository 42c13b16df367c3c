#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Modify scenario files and construct grids of scenario files."""

from __future__ import annotations

from pathlib import Path
from shutil import copyfile

from pycran.error import InvalidConfig

SCENARIO_SUFFIX = ".pf"


def _check_suffix(filepath: Path) -> None:
    if filepath.suffix != SCENARIO_SUFFIX:
        raise OSError(f"provided file path {filepath} is not a {SCENARIO_SUFFIX} scenario file")


def get_parameter_value(filepath: str | Path, parameter_name: str) -> str:
    """Get the value for a parameter in a scenario file.

    Parameters
    ----------
    filepath : str or Path
        The path to the scenario file
    parameter_name : str
        The name of the parameter

    Returns
    -------
    value : str
        The value of the parameter, as a string.

    """
    filepath = Path(filepath)
    _check_suffix(filepath)
    with filepath.open(encoding="utf-8") as file_in:
        lines = file_in.readlines()

    for line in lines:
        split = line.split()
        if not split or split[0] != parameter_name:
            continue
        if len(split) != 2:  # noqa: PLR2004
            raise IndexError(f"Invalid syntax for {parameter_name} in {filepath}")
        return split[-1]

    raise InvalidConfig(f"Could not find the parameter {parameter_name} in {filepath}")


def update_parameter_value(
    filepath: str | Path, parameter_name: str, parameter_value: str | float, *, backup_original: bool = False
) -> None:
    """Change the value of a parameter in a scenario file.

    If the parameter is not in the file, it is appended as scenario files
    do not need to list every parameter.

    Parameters
    ----------
    filepath : str or Path
        The path to the scenario file
    parameter_name: str
        The name of the parameter to update
    parameter_value : str or float
        The updated value of the parameter
    backup_original : bool [optional]
        Create a back up of the original scenario file

    """
    filepath = Path(filepath)
    _check_suffix(filepath)
    if backup_original:
        copyfile(filepath, filepath.with_suffix(filepath.suffix + ".bak"))
    with filepath.open(encoding="utf-8") as file_in:
        lines = file_in.readlines()

    new = f"{parameter_name:40s} {parameter_value}\n"
    for i, line in enumerate(lines):
        split = line.split()
        if split and split[0] == parameter_name:
            lines[i] = new
            break
    else:
        lines.append(new)

    with filepath.open(mode="w", encoding="utf-8") as file_out:
        file_out.writelines(lines)


def create_grid(
    filepath: str | Path,
    parameter_name: str,
    parameter_values: list[str | float],
    *,
    grid_name: str | None = None,
    output_directory: str | Path | None = None,
) -> list[Path]:
    """Create a grid of scenario files for a given parameter.

    This creates one scenario file per value of the parameter, using an
    existing scenario file for the rest of the parameters.

    Parameters
    ----------
    filepath : str or Path
        The path to the base scenario file to construct the grid from
    parameter_name : str
        The name of the parameter to create a grid of
    parameter_values : List[str | float]
        A list of values for the parameter
    grid_name : str [optional]
        Adds an extra name to the output file names, to associate the
        scenario file to the grid.
    output_directory : str or Path [optional]
        Where to write the grid, by default next to the base file.

    Returns
    -------
    grid_files : list[Path]
        The paths to the newly generated scenario files for the grid

    """
    filepath = Path(filepath)
    _check_suffix(filepath)
    directory = Path(output_directory) if output_directory else filepath.parent

    grid_files = []
    for value in parameter_values:
        stem = filepath.stem
        if grid_name:
            stem += f"_{grid_name}"
        new_file = directory / f"{stem}_{value}{SCENARIO_SUFFIX}"
        copyfile(filepath, new_file)
        update_parameter_value(new_file, parameter_name, value)
        grid_files.append(new_file)

    return grid_files
