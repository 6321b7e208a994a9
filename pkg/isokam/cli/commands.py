"""The experiments run by the isokam command line, one function per command.

Each command takes a validated ExperimentConfig and a proglog logger and
returns ``(result, tables, error)``: a JSON-ready dict, a dict of pandas
dataframes written as CSV, and the IsokamError that interrupted the
experiment, if any.
"""

import numpy as np
import pandas

from ..tools import make_rng, resolve_threads
from ..liegroup import GeneratorTuple, GroupElement, haar_samples, read_matrices
from ..wordsynth import (
    epsilon_net_bfs,
    solovay_kitaev,
    compile_without_inverses,
    fit_contraction_constant,
)
from ..harmonic import (
    HarmonicCoeffs,
    apply_averaging,
    gap_profile,
    solve_coboundary,
    tameness_profile,
)
from ..rds import load_system, reference_generators, reference_system
from ..strain import strain_norms, lambda_r_strain_expansion
from ..grassmann import lambda_r_mc, lambda_r_taylor, sphere_moments
from ..kam import Schedule, kam_step, kam_run, top_bottom_symmetry, symmetry_scaling
from .errors import ConfigInvalid


def _threads(config):
    return resolve_threads(None if config.threads == "auto" else config.threads)


def _generators(config, dim=2):
    if config.generators is not None:
        try:
            return GeneratorTuple(read_matrices(config.generators))
        except ValueError as error:
            raise ConfigInvalid("generators", str(error))
    return reference_generators(dim, config.seed)


def _system(config):
    if config.system is not None:
        try:
            return load_system(config.system)
        except (KeyError, ValueError) as error:
            raise ConfigInvalid("system", "malformed system file (%s)" % error)
    parameters = config.parameters
    return reference_system(
        dim=parameters["dim"],
        epsilon=parameters["epsilon"],
        kind=parameters["kind"],
        seed=config.seed,
    )


def _random_phi(l_max, seed):
    """Smooth random scalar function with coefficients decaying as (l+1)^-4."""
    rng = make_rng(seed)
    blocks = [
        rng.standard_normal(2 * degree + 1) / (degree + 1) ** 4
        for degree in range(l_max + 1)
    ]
    return HarmonicCoeffs(blocks)


def sk_compile(config, logger):
    parameters = config.parameters
    S = _generators(config)
    if config.target is not None:
        targets = [GroupElement(matrix) for matrix in read_matrices(config.target)]
    else:
        samples = haar_samples(S.dim, parameters["n_targets"], config.seed)
        targets = [GroupElement(matrix) for matrix in samples]
    net = epsilon_net_bfs(
        S,
        parameters["net_epsilon"],
        parameters["net_max_len"],
        symmetric=True,
        logger=logger,
    )
    records, traces = [], []
    for target in logger.iter_bar(target=targets):
        if parameters["inverse_free"]:
            compiled = compile_without_inverses(
                target,
                S,
                parameters["epsilon"],
                net=net,
                max_depth=parameters["depth"],
                n_max=parameters["n_max"],
                logger=logger,
            )
            records.append(compiled.to_dict())
        else:
            word, trace = solovay_kitaev(
                target,
                net,
                parameters["depth"],
                return_trace=True,
                balanced=parameters["balanced"],
            )
            traces.append(trace)
            records.append(dict(word=word.to_dict(), distance=trace[-1], trace=trace))
    result = dict(
        net_size=len(net),
        net_covering_radius=net.covering_radius,
        net_max_length=net.max_length,
        targets=records,
    )
    if traces:
        result["contraction_constant"] = fit_contraction_constant(traces)
        result["median_distance"] = float(np.median([t[-1] for t in traces]))
    table = pandas.DataFrame(
        [
            dict(target=i, distance=record["distance"], length=record["word"]["length"])
            for i, record in enumerate(records)
        ]
    )
    return result, dict(words=table), None


def gap(config, logger):
    parameters = config.parameters
    S = _generators(config)
    threads = _threads(config)
    profile = gap_profile(
        S, parameters["l_max"], parameters["n_powers"], threads=threads, logger=logger
    )
    tameness = tameness_profile(S, parameters["l_max"], threads=threads)
    result = profile.to_dict()
    result["max_tameness_ratio"] = float(tameness["ratio_log4"][tameness["l"] >= 2].max())
    tables = dict(gap_profile=profile.to_dataframe(), tameness=tameness)
    return result, tables, None


def coboundary(config, logger):
    parameters = config.parameters
    S = _generators(config)
    if config.phi is not None:
        phi = HarmonicCoeffs.from_json_file(config.phi)
    else:
        phi = _random_phi(parameters["l_max"], config.seed)
    psi = solve_coboundary(
        S, phi, parameters["tolerance"], threads=_threads(config), logger=logger
    )
    result = dict(psi=psi.to_dict(), solve_residual=psi.fit_residual)
    if phi.channel == "scalar":
        equation_error = (psi - apply_averaging(S, psi)) - phi.without_mean()
        result["equation_residual"] = equation_error.l2_norm()
    return result, {}, None


def lyapunov(config, logger):
    parameters = config.parameters
    system = _system(config)
    spectrum = system.lyapunov_spectrum(
        x0="haar",
        n_steps=parameters["n_steps"],
        seed=config.seed,
        n_walkers=parameters["n_walkers"],
        burn_in=parameters["burn_in"],
        n_batches=parameters["n_batches"],
        logger=logger,
    )
    result = spectrum.to_dict()
    result["dim"] = system.dim
    return result, dict(lyapunov_trace=spectrum.trace_dataframe()), None


def strain(config, logger):
    parameters = config.parameters
    system = _system(config)
    threads = _threads(config)
    n_quad = parameters["n_quad"]
    norms = [
        strain_norms(f, n_quad, config.seed, threads=threads, logger=logger)
        for f in system.maps
    ]
    expansion = pandas.DataFrame(
        [
            dict(
                r=r,
                **lambda_r_strain_expansion(
                    system, r, n_quad, config.seed, threads=threads, logger=logger
                )
            )
            for r in range(1, system.dim + 1)
        ]
    )
    result = dict(
        dim=system.dim, strain_norms=norms, expansion=expansion.to_dict("records")
    )
    return result, dict(strain_expansion=expansion), None


def grassmann_check(config, logger):
    parameters = config.parameters
    d, r, norm = parameters["dim"], parameters["r"], parameters["norm"]
    if r > d:
        raise ConfigInvalid("parameters.r", "must be <= dim = %d, got %d" % (d, r))
    rng = make_rng(config.seed)
    threads = _threads(config)
    records = []
    for i in logger.iter_bar(matrix=range(parameters["n_matrices"])):
        L = rng.standard_normal((d, d))
        L *= norm / np.linalg.norm(L)
        taylor = lambda_r_taylor(L, r)
        estimate, error = lambda_r_mc(
            L, r, parameters["samples"], seed=[config.seed, i], threads=threads
        )
        bound = 5 * norm ** 3 + 3 * error
        records.append(
            dict(
                matrix=i,
                taylor=taylor,
                mc=estimate,
                se=error,
                diff=abs(estimate - taylor),
                bound=bound,
                within_bound=bool(abs(estimate - taylor) <= bound),
            )
        )
    table = pandas.DataFrame(records)
    result = dict(
        n_within_bound=int(table["within_bound"].sum()),
        n_matrices=len(table),
        max_diff=float(table["diff"].max()),
        matrices=records,
    )
    return result, dict(grassmann_check=table), None


def _kam_options(config):
    parameters = config.parameters
    return dict(
        s=parameters["s"],
        n_quad=parameters["n_quad"],
        extraction_points=parameters["extraction_points"],
        seed=config.seed,
        threads=_threads(config),
    )


def kam_step_command(config, logger):
    system = _system(config)
    report = kam_step(
        system.maps,
        list(system.generators),
        config.parameters["cutoff"],
        l_max=config.parameters["l_max"],
        logger=logger,
        **_kam_options(config)
    )
    result = report.to_dict()
    result["mean_field_reduction"] = report.mean_field_reduction
    return result, {}, None


def kam_run_command(config, logger):
    try:
        schedule = Schedule.from_string(config.parameters["schedule"])
    except ValueError as error:
        raise ConfigInvalid("parameters.schedule", str(error))
    system = _system(config)
    run = kam_run(
        system.maps,
        list(system.generators),
        schedule,
        l_max=config.parameters["l_max"],
        logger=logger,
        **_kam_options(config)
    )
    result = dict(
        schedule=schedule.to_dict(), steps=run.to_list(), stagnated=run.stagnated
    )
    error = run.errors[0] if run.errors else None
    return result, dict(epsilon_trace=run.epsilon_trace()), error


def symmetry(config, logger):
    parameters = config.parameters
    options = dict(
        n_steps=parameters["n_steps"],
        seed=config.seed,
        n_walkers=parameters["n_walkers"],
        predict=parameters["predict"],
        n_quad=parameters["n_quad"],
        logger=logger,
    )
    if config.system is not None:
        records = [top_bottom_symmetry(load_system(config.system), **options)]
    else:
        rotations = reference_generators(parameters["dim"], config.seed)
        records = symmetry_scaling(
            rotations, epsilons=parameters["epsilons"], field_seed=config.seed, **options
        )
    return dict(runs=records), dict(symmetry=pandas.DataFrame(records)), None


def moments(config, logger):
    result = sphere_moments(
        config.parameters["dim"],
        config.parameters["samples"],
        config.seed,
        threads=_threads(config),
        logger=logger,
    )
    return result, {}, None


COMMAND_FUNCTIONS = {
    "sk-compile": sk_compile,
    "gap": gap,
    "coboundary": coboundary,
    "lyapunov": lyapunov,
    "strain": strain,
    "grassmann-check": grassmann_check,
    "kam-step": kam_step_command,
    "kam-run": kam_run_command,
    "symmetry": symmetry,
    "moments": moments,
}
