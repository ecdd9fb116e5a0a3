# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/cli.py


"""Command line interface.

    voxellate run --kind KIND [options]
    voxellate voronoi|johnson-mehl|laguerre [options]
    voxellate cost-curve [options]
    voxellate benchmark --site-counts N1,N2,... [options]
    voxellate validate --labels PATH --site-file PATH [--distances PATH]

Exit status: 0 success, 2 usage error, 1 file or format error (or a
failed validation, or engines disagreeing in a benchmark).
"""


import argparse
import csv
import logging
import sys
import time

import numpy as np

from .config import RunConfig
from .cost import cost_curve, optimal_r0, search_optimal_t0
from .files import (
    FormatError,
    ParsingError,
    emit_metrics,
    export_slice,
    metrics_row,
    read_distance_image,
    read_label_image,
    read_site_file,
    write_distance_image,
    write_label_image,
    write_site_file,
)
from .geometry import KIND_VORONOI, KINDS, NON_PERIODIC, PERIODIC, Domain, VoxelGrid
from .misc import UsageError, get_run_id
from .sites import generate_uniform_sites
from .tessellate import cell_sizes, engine_registry, validate_partition


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# flag dest -> config key; values are passed as text to the codecs
CONFIG_FLAGS = [
    "kind",
    "dims",
    "lengths",
    "boundary",
    "n_sites",
    "site_counts",
    "site_file",
    "growth",
    "horizon",
    "seed",
    "engine",
    "r0",
    "t0",
    "prune",
    "output",
    "threads",
    "slice",
    "sweep",
    "palette_seed",
]


def add_geometry_args(p):
    p.add_argument("--dims", metavar="N1,...,Nd", help="voxel counts per axis")
    p.add_argument("--lengths", metavar="L1,...,Ld", help="domain lengths (default: unit box)")
    p.add_argument("--periodic", dest="boundary", action="store_const", const=PERIODIC, help="periodic boundary")
    p.add_argument(
        "--non-periodic", dest="boundary", action="store_const", const=NON_PERIODIC, help="non-periodic boundary"
    )


def add_sites_args(p):
    p.add_argument("--sites", dest="n_sites", metavar="N", help="number of random sites")
    p.add_argument("--site-file", dest="site_file", metavar="PATH", help="site file to read")
    p.add_argument("--growth", metavar="G", help="growth rate (johnson-mehl, laguerre)")
    p.add_argument("--horizon", metavar="T", help="birth times uniform in [0, T)")
    p.add_argument("--seed", metavar="SEED", help="site generator seed")


def add_run_args(p):
    add_geometry_args(p)
    add_sites_args(p)
    p.add_argument("--engine", choices=list(engine_registry.keys()), help="tessellation engine")
    p.add_argument("--r0", metavar="R", help="investigation-ball radius (voronoi)")
    p.add_argument("--t0", metavar="T", help="fictitious time (johnson-mehl, laguerre)")
    p.add_argument("--no-prune", dest="prune", action="store_const", const="0", help="keep ineffective sites")
    p.add_argument("--output", metavar="PREFIX", help="output file prefix")
    p.add_argument("--threads", metavar="N", help="worker threads")
    p.add_argument("--slice", metavar="AXIS:INDEX", help="raster export of a slice (or 'all' for 2-D)")
    p.add_argument("--sweep", metavar="r0=a:b:n", help="sweep the ball parameter")
    p.add_argument("--palette-seed", dest="palette_seed", metavar="SEED", help="label palette seed")


def get_parser():
    parser = argparse.ArgumentParser(prog="voxellate", description="Voxel tessellations of punctual sites.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="tessellate")
    p.add_argument("--kind", choices=KINDS, help="tessellation kind")
    add_run_args(p)

    for kind in KINDS:
        p = sub.add_parser(kind, help=f"tessellate ({kind})")
        p.set_defaults(kind=kind)
        add_run_args(p)

    p = sub.add_parser("cost-curve", help="print the model cost along r0 or t0")
    p.add_argument("--kind", choices=KINDS, help="tessellation kind")
    add_geometry_args(p)
    add_sites_args(p)
    p.add_argument("--points", type=int, default=65, help="number of samples")

    p = sub.add_parser("benchmark", help="time the brute and fast engines over site counts")
    p.add_argument("--kind", choices=KINDS, help="tessellation kind")
    add_geometry_args(p)
    p.add_argument("--site-counts", dest="site_counts", metavar="N1,N2,...", help="site counts to time")
    p.add_argument("--growth", metavar="G", help="growth rate (johnson-mehl, laguerre)")
    p.add_argument("--horizon", metavar="T", help="birth times uniform in [0, T)")
    p.add_argument("--seed", metavar="SEED", help="site generator seed")
    p.add_argument("--no-prune", dest="prune", action="store_const", const="0", help="keep ineffective sites")
    p.add_argument("--output", metavar="PREFIX", help="metrics file prefix")
    p.add_argument("--threads", metavar="N", help="worker threads")

    p = sub.add_parser("validate", help="check a label image against its sites")
    p.add_argument("--labels", required=True, metavar="PATH", help="label image")
    p.add_argument("--distances", metavar="PATH", help="distance image")
    p.add_argument("--site-file", dest="site_file", required=True, metavar="PATH", help="site file")
    p.add_argument("--sample", type=int, metavar="N", help="check N random voxels")
    p.add_argument("--seed", type=int, default=0, help="sample seed")

    return parser


def config_from_args(args, environ=None):
    """Return a RunConfig: packaged defaults < environment < flags."""

    config = RunConfig.from_defaults(environ)
    for key in CONFIG_FLAGS:
        text = getattr(args, key, None)
        if text != None:
            config.set_text(key, text)
    return config


def load_sites(config, domain):
    """Return sites from the site file, or generated per config."""

    if config.site_file != None:
        sites = read_site_file(config.site_file)
        if sites.kind != config.kind:
            logger.warning(f"site file kind ({sites.kind}) replaces kind ({config.kind})")
        return sites

    return generate_uniform_sites(
        domain,
        config.n_sites,
        kind=config.kind,
        growth=config.growth,
        horizon=config.horizon,
        seed=config.seed,
    )


def run(config, out=None):
    """Tessellate per config and write images, sites and metrics.

    Returns:
        Exit status.
    """

    out = out or sys.stdout
    config.check()

    domain = Domain(config.get_lengths(), config.boundary)
    grid = VoxelGrid(config.dims, domain)
    sites = load_sites(config, domain)
    config.check_param(sites.kind)

    sweep = config.get_sweep()
    if sweep != None and config.engine != "fast":
        raise UsageError("sweeps need the fast engine")
    params = sweep[1] if sweep != None else [config.get_override(sites.kind)]

    run_id = get_run_id()
    rows = []
    for param in params:
        tstart = time.perf_counter()
        labels, distances, counters = engine_registry.run(
            config.engine,
            sites,
            grid,
            override_param=param,
            prune=config.prune,
            threads=config.threads,
        )
        wall = time.perf_counter() - tstart
        rows.append(
            metrics_row(
                run_id, sites.kind, config.engine, grid.n_voxels, sites.n_sites, counters, counters.model_step12, wall
            )
        )
        logger.debug(f"param ({param}) counters ({counters}) wall ({wall:.3f})")

    prefix = config.output
    seed = config.seed if config.site_file == None else None
    write_label_image(f"{prefix}.labels.bin", labels, seed=seed)
    write_distance_image(f"{prefix}.distances.bin", distances, n_sites=sites.n_sites, seed=seed)
    write_site_file(
        f"{prefix}.sites.txt",
        sites,
        comments=[f"run {run_id}", f"seed {seed}" if seed != None else f"from {config.site_file}"],
    )
    emit_metrics(rows, f"{prefix}.metrics.csv")

    plane = config.get_slice()
    if plane != None:
        axis, index = plane
        export_slice(labels, axis, index, f"{prefix}.slice.ppm", config.palette_seed)
        export_slice(distances, axis, index, f"{prefix}.slice.pgm")

    sizes = cell_sizes(labels)
    last = rows[-1]
    print(f"kind {sites.kind} engine {config.engine} run {run_id}", file=out)
    print(f"N_v {grid.n_voxels} N_s {sites.n_sites} empty cells {int((sizes == 0).sum())}", file=out)
    if counters.param_name != None:
        print(f"{counters.param_name} {counters.param:.6g}", file=out)
    print(
        f"step1 {counters.step1_evals} step2 {counters.step2_evals} total {counters.total}"
        f" model {counters.model_step12:.6g} per voxel {counters.total / grid.n_voxels:.4f}",
        file=out,
    )
    print(f"wall {last['wall_seconds']} s", file=out)
    return EXIT_OK


def cost_curve_command(config, points, out=None):
    """Print the model cost curve as CSV."""

    out = out or sys.stdout
    config.check()
    domain = Domain(config.get_lengths(), config.boundary)
    grid = VoxelGrid(config.dims, domain)
    sites = load_sites(config, domain)

    if sites.kind == KIND_VORONOI:
        best = optimal_r0(sites.n_sites, domain)
    else:
        best = search_optimal_t0(sites, grid)

    name, rows = cost_curve(sites, grid, n_points=points)
    print(f"# optimal {name} {best!r}", file=out)
    writer = csv.writer(out)
    writer.writerow([name, "model_step12", "model_per_voxel"])
    for param, cost in rows:
        writer.writerow([repr(param), repr(cost), repr(cost / grid.n_voxels)])
    return EXIT_OK


def benchmark_command(config, out=None):
    """Time every engine on the same sites for each site count; write
    one metrics row per engine and count, and print the speedups.

    Returns:
        Exit status; failure if the engines disagree on a label.
    """

    out = out or sys.stdout
    config.check_benchmark()
    domain = Domain(config.get_lengths(), config.boundary)
    grid = VoxelGrid(config.dims, domain)

    run_id = get_run_id()
    rows = []
    agree = True
    writer = csv.writer(out)
    writer.writerow(["N_s", "brute_seconds", "fast_seconds", "speedup", "labels"])
    for n_sites in config.site_counts:
        sites = generate_uniform_sites(
            domain,
            n_sites,
            kind=config.kind,
            growth=config.growth,
            horizon=config.horizon,
            seed=config.seed,
        )
        walls = {}
        labels = {}
        for engine in engine_registry.keys():
            tstart = time.perf_counter()
            image, _, counters = engine_registry.run(
                engine,
                sites,
                grid,
                override_param=config.get_override(sites.kind),
                prune=config.prune,
                threads=config.threads,
            )
            walls[engine] = time.perf_counter() - tstart
            labels[engine] = image.labels
            rows.append(
                metrics_row(
                    run_id, sites.kind, engine, grid.n_voxels, n_sites, counters, counters.model_step12, walls[engine]
                )
            )

        same = np.array_equal(labels["brute"], labels["fast"])
        if not same:
            agree = False
            logger.warning(f"engines disagree at N_s ({n_sites})")
        speedup = walls["brute"] / max(walls["fast"], 1e-9)
        writer.writerow(
            [
                n_sites,
                f"{walls['brute']:.6f}",
                f"{walls['fast']:.6f}",
                f"{speedup:.3f}",
                "equal" if same else "differ",
            ]
        )
        logger.debug(f"N_s ({n_sites}) walls ({walls})")

    emit_metrics(rows, f"{config.output}.metrics.csv")
    return EXIT_OK if agree else EXIT_FAILURE


def validate_command(args, out=None):
    """Check a label image (and distances) against a site file."""

    out = out or sys.stdout
    labels = read_label_image(args.labels)
    distances = read_distance_image(args.distances) if args.distances else None
    sites = read_site_file(args.site_file)
    if sites.n_sites != labels.n_sites:
        raise FormatError(f"label image has ({labels.n_sites}) sites, site file ({sites.n_sites})")

    report = validate_partition(labels, sites, labels.grid, distances=distances, sample=args.sample, seed=args.seed)
    print(f"checked {report.checked} violations {len(report.violations)}", file=out)
    for violation in report.violations[:10]:
        print(
            f"voxel {violation.index} label {violation.label} expected {violation.expected}"
            f" ({','.join(violation.reasons)})",
            file=out,
        )
    return EXIT_OK if report.ok else EXIT_FAILURE


def main(argv=None):
    parser = get_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        if args.command == "validate":
            return validate_command(args)

        config = config_from_args(args)
        logger.debug(f"config ({dict(config.get_items())})")
        if args.command == "benchmark":
            return benchmark_command(config)
        if args.command == "cost-curve":
            return cost_curve_command(config, args.points)
        return run(config)
    except UsageError as e:
        print(f"voxellate: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ParsingError, FormatError, OSError) as e:
        print(f"voxellate: error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
