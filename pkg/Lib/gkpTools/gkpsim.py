"""\
usage: gkpsim command [options] [input]

    Exact simulation of GKP circuits with rational Gaussian operations.

    Commands:
    pdf FILE
        Print the lattice support of measuring every mode of a circuit.
    sample FILE
        Sample every mode of a circuit, --shots times.
    adaptive FILE
        Run a staged program with outcome-dependent operations.
    check FILE
        Report symplectic validity, classification, rank of S and sigma.
    compile-clifford WORD
        Print the Gaussian operation of a Clifford word, e.g.
        "CX(0,1) F(0) P(0) P(0) F(0)" (leftmost token acts last).
    magic-scan
        Probability that the finite-squeezing gadget beats F*, as CSV.

    Options:
    --seed=N
        Non-negative seed of the random generator (default 0).
    --shots=N
        Number of shots for sample and adaptive (default 1).
    --modulus=P/Q
        Report sample outcomes modulo P/Q * sqrt(pi).
    --window=N
        Draw plain samples from lattice indices in [-N, N] (default 2); adaptive
        stages without their own window use it too.
    --grid=N
        Points per axis of the magic-scan grid (default 64, at least 32).
    --deltas=D1,D2,..., --delta=...
        Peak widths for magic-scan (default 1).
    --kappas=K1,K2,..., --kappa=...
        Envelope widths for magic-scan (default: same as --deltas).
    --fstar=F
        Fidelity threshold (default (1 + 1/sqrt(2)) / 2).
    --targets=orbit|real
        H-type target set for magic-scan (default orbit).
    --map=FILE
        Also write the fidelity map of the first delta/kappa pair as CSV.
    --format=text|structured
        Structured output is XML.
    --out=FILE
        Write output to FILE instead of standard output.
    -v, --verbose
        Progress messages on standard error.
    --timing
        Timing messages on standard error.
    -h, --help
        Print this message.

    Exit status is 0 on success, 2 for bad input or options, 3 when an
    operation is not rational symplectic, 4 for a non-symplectic matrix
    and 1 for any other failure.
"""

from __future__ import print_function, division, absolute_import
from gkpTools import version
from gkpTools.circuitLib.builder import parseCircuit, loadCircuit, buildProgram
from gkpTools.circuitLib.classify import classify
from gkpTools.circuitLib.clifford import CliffordWord, compile_clifford
from gkpTools.circuitLib.error import CircuitLibError
from gkpTools.circuitLib.gaussianOp import GaussianOp
from gkpTools.error import GkpError, NonRationalError, SymplecticError, StageError
from gkpTools.latticeLib.pdf import build_S, compute_pdf
from gkpTools.misc.loggingTools import Logger
from gkpTools.misc.rationalTools import format_rational, parse_rational, rank
from gkpTools.misc.xmlWriter import XMLWriter
from gkpTools import magic, sampler
from contextlib import contextmanager
import sys

__usage__ = "gkpsim command [options] [input]"

COMMANDS = ["pdf", "sample", "adaptive", "check", "compile-clifford", "magic-scan"]


def _floats(text):
    return [float(x) for x in text.replace(',', ' ').split()]


class Options(object):

    class OptionError(Exception): pass
    class UnknownOptionError(OptionError): pass

    seed = 0
    shots = 1
    window = sampler.DEFAULT_WINDOW
    modulus = None
    grid = 64
    deltas = [1.0]
    kappas = None
    fstar = magic.F_STAR
    targets = "orbit"
    map = None
    format = "text"
    out = None
    verbose = False
    timing = False

    # Options whose default does not reveal the type of their value.
    _parsers = {
        'modulus': parse_rational,
        'deltas': _floats,
        'kappas': _floats,
        'fstar': float,
        'map': str,
        'out': str,
    }
    _aliases = {
        'delta': 'deltas',
        'kappa': 'kappas',
    }
    _choices = {
        'format': ("text", "structured"),
        'targets': ("orbit", "real"),
    }

    def __init__(self, **kwargs):
        self.set(**kwargs)

    def set(self, **kwargs):
        for k, v in kwargs.items():
            if not hasattr(self, k):
                raise self.UnknownOptionError("Unknown option '%s'" % k)
            setattr(self, k, v)

    def _convert(self, k, v):
        ov = getattr(self, k)
        try:
            if k in self._parsers:
                return self._parsers[k](v)
            if isinstance(ov, bool):
                return bool(v)
            if isinstance(ov, int):
                return int(v)
            return str(v)
        except (ValueError, ZeroDivisionError):
            raise self.OptionError("Bad value for option '%s': '%s'" % (k, v))

    def parse_opts(self, argv):
        """Consume --name=value, --name value, --name and --no-name arguments."""
        ret = []
        argv = list(argv)
        while argv:
            a = argv.pop(0)
            if not a.startswith('--'):
                ret.append(a)
                continue
            a = a[2:]
            i = a.find('=')
            if i == -1:
                if a.startswith("no-") and isinstance(getattr(self, a[3:].replace('-', '_'), None), bool):
                    k, v = a[3:], False
                else:
                    k, v = a, None
            else:
                k, v = a[:i], a[i+1:]
            k = k.replace('-', '_')
            k = self._aliases.get(k, k)
            if not hasattr(self, k) or k.startswith('_'):
                raise self.UnknownOptionError("Unknown option '%s'" % a)
            if v is None:
                if isinstance(getattr(self, k), bool):
                    v = True
                elif argv:
                    v = argv.pop(0)
                else:
                    raise self.OptionError("Option '%s' requires a value" % a)
            if isinstance(v, str):
                v = self._convert(k, v)
            if k in self._choices and v not in self._choices[k]:
                raise self.OptionError("Option '%s' must be one of %s"
                                       % (k, ", ".join(self._choices[k])))
            setattr(self, k, v)
        if self.seed < 0:
            raise self.OptionError("Option 'seed' must be non-negative")
        if self.shots < 1 or self.window < 1:
            raise self.OptionError("Options 'shots' and 'window' must be positive")
        if self.modulus is not None and self.modulus <= 0:
            raise self.OptionError("Option 'modulus' must be positive")
        if self.grid < magic.MIN_GRID:
            raise self.OptionError("Option 'grid' must be at least %d" % magic.MIN_GRID)
        if any(x <= 0 for x in self.deltas + (self.kappas or [])):
            raise self.OptionError("Options 'deltas' and 'kappas' must be positive")
        if self.kappas is not None and len(self.kappas) != len(self.deltas):
            raise self.OptionError("Options 'deltas' and 'kappas' must have the same length")
        return ret


def _rows(m):
    return [" ".join(format_rational(x) for x in m.row(i)) for i in range(m.rows)]


@contextmanager
def _structured(out, tag, **attrs):
    writer = XMLWriter(out)
    with writer.element("gkpsim", version=version, command=tag, **attrs):
        yield writer


def cmd_pdf(path, options, out, log):
    op = loadCircuit(path)
    log.lapse("parse circuit")
    pdf = compute_pdf(op)
    log.lapse("compute lattice")
    if options.format == "structured":
        with _structured(out, "pdf") as writer:
            pdf.toXML(writer)
    else:
        for line in pdf.summary():
            print(line, file=out)
    return pdf


def _print_histogram(counts, out, writer=None):
    if writer is not None:
        with writer.element("histogram"):
            for outcomes, count in counts:
                writer.line("bin", [("outcomes", outcomes), ("count", count)])
        return
    print("histogram:", file=out)
    for outcomes, count in counts:
        print("  %s: %d" % (" ".join(str(x) for x in outcomes), count), file=out)


def cmd_sample(path, options, out, log):
    op = loadCircuit(path)
    if not isinstance(op, GaussianOp):
        raise NonRationalError("Cannot sample a circuit that is not rational symplectic",
                               classify(op))
    shots = sampler.sample_shots(op, options.seed, options.shots,
                                 options.modulus, options.window)
    log.lapse("sample %d shots" % options.shots)
    counts = sampler.histogram(shots)
    if options.format == "structured":
        if options.modulus is None:
            attrs = {"window": options.window}
        else:
            attrs = {"modulus": options.modulus}
        with _structured(out, "sample", seed=options.seed, shots=options.shots,
                         **attrs) as writer:
            for i, shot in enumerate(shots):
                writer.line("shot", [("index", i), ("outcomes", shot)])
            _print_histogram(counts, out, writer)
    else:
        if options.modulus is None:
            print("window: %d" % options.window, file=out)
        for i, shot in enumerate(shots):
            print("shot %d: %s" % (i, " ".join(str(x) for x in shot)), file=out)
        _print_histogram(counts, out)
    return shots


def cmd_adaptive(path, options, out, log):
    circ = buildProgram(parseCircuit(path))
    records = []
    for shot in range(options.shots):
        records.append(sampler.run_adaptive(circ, options.seed, shot, log=log,
                                               window=options.window))
    log.lapse("run %d shots" % options.shots)
    counts = sampler.histogram(r.outcomes() for r in records)
    if options.format == "structured":
        with _structured(out, "adaptive", seed=options.seed, shots=options.shots) as writer:
            for i, record in enumerate(records):
                with writer.element("shot", index=i):
                    for s, stage in enumerate(record.stages):
                        writer.line("stage", [("index", s)] + sorted(stage.toDict().items()))
            _print_histogram(counts, out, writer)
    else:
        for i, record in enumerate(records):
            stages = " ".join("%d=%s" % (s.mode, s.outcome) for s in record.stages)
            print("shot %d: %s" % (i, stages), file=out)
        _print_histogram(counts, out)
    return records


def check_report(op):
    """(key, value) lines describing an operation."""
    verdict = classify(op)
    report = [("classification", verdict)]
    if isinstance(op, GaussianOp):
        S = build_S(op.heisenberg())
        pdf = compute_pdf(op)
        report += [("symplectic", "yes"), ("rational", "yes"),
                   ("modes", op.n_modes), ("S rank", rank(S)),
                   ("sigma", pdf.sigma)]
    else:
        # No exact matrix to test.
        report += [("symplectic", "n/a"), ("rational", "no"),
                   ("modes", op.n_modes)]
    return report


def cmd_check(path, options, out, log):
    op = loadCircuit(path)
    report = check_report(op)
    if options.format == "structured":
        with _structured(out, "check") as writer:
            for key, value in report:
                writer.line("item", [("name", key), ("value", value)])
    else:
        for key, value in report:
            print("%s: %s" % (key, value), file=out)
    return report


def cmd_compile_clifford(text, options, out, log):
    try:
        word = CliffordWord.fromString(text)
    except (ValueError, IndexError) as e:
        raise CircuitLibError(str(e), None)
    op = compile_clifford(word)
    if options.format == "structured":
        with _structured(out, "compile-clifford", word=str(word)) as writer:
            writer.matrix("matrix", op.M)
            writer.line("displacement", values=op.disp)
    else:
        print("word: %s" % word, file=out)
        print("matrix:", file=out)
        for row in _rows(op.M):
            print("  " + row, file=out)
        print("displacement (sqrt(pi) units): " + " ".join(str(d) for d in op.disp), file=out)
    return op


def cmd_magic_scan(options, out, log):
    rows = magic.probability_curve(options.deltas, options.kappas, options.grid,
                                   options.fstar, options.targets, log=log)
    log.lapse("scan %d points" % len(rows))
    magic.write_probability_curve_csv(out, rows)
    if options.map is not None:
        delta, kappa = rows[0][0], rows[0][1]
        t, fidelity, _ = magic.fidelity_map(magic.FiniteGKP(delta, kappa),
                                            options.grid, options.targets)
        with open(options.map, "w", encoding="utf-8", newline="\n") as f:
            magic.write_fidelity_map_csv(f, t, fidelity)
        log.lapse("write fidelity map")
    return rows


def run(command, args, options, out, log):
    if command == "magic-scan":
        if args:
            raise Options.OptionError("magic-scan takes no input file")
        return cmd_magic_scan(options, out, log)
    if len(args) != 1:
        raise Options.OptionError("%s takes exactly one input" % command)
    if options.modulus is not None and command not in ("sample",):
        raise Options.OptionError("Option 'modulus' only applies to sample")
    handler = {
        "pdf": cmd_pdf,
        "sample": cmd_sample,
        "adaptive": cmd_adaptive,
        "check": cmd_check,
        "compile-clifford": cmd_compile_clifford,
    }[command]
    return handler(args[0], options, out, log)


def exit_code(e):
    if isinstance(e, StageError) and getattr(e, "cause", None) is not None:
        return exit_code(e.cause)
    if isinstance(e, (CircuitLibError, Options.OptionError, IOError)):
        return 2
    if isinstance(e, NonRationalError):
        return 3
    if isinstance(e, SymplecticError):
        return 4
    return 1


def main(args=None):
    if args is None:
        args = sys.argv[1:]

    if '--help' in args or '-h' in args:
        print(__doc__)
        return 0

    log = Logger()
    args = log.parse_opts(args)
    options = Options(verbose=log.verbose, timing=log.timing)
    try:
        args = options.parse_opts(args)
        if not args or args[0] not in COMMANDS:
            raise Options.OptionError("Expected a command: %s" % ", ".join(COMMANDS))
        command, args = args[0], args[1:]
        if options.out is not None:
            with open(options.out, "w", encoding="utf-8", newline="\n") as out:
                run(command, args, options, out, log)
        else:
            run(command, args, options, sys.stdout, log)
    except (GkpError, Options.OptionError, IOError) as e:
        print("gkpsim: error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return exit_code(e)
    except KeyboardInterrupt:
        print("(Cancelled.)", file=sys.stderr)
        return 1
    log.total(command)
    return 0


if __name__ == '__main__':
    sys.exit(main())
