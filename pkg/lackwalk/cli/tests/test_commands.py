import contextlib
import io
import math
from dataclasses import replace
from pathlib import Path
import tempfile
from typing import List, Tuple
from unittest import TestCase

import numpy as np

from lackwalk.cli.commands import analytic_values, cmd_heatmap, cmd_simulate, cmd_verify
from lackwalk.cli.config import build_config
from lackwalk.cli.main import main
from lackwalk.cli.output import read_trace_csv
from lackwalk.cli.verify import check_cross_engine, check_unitarity, run_checks
from lackwalk.experiments.sweeps import loopless_reference, peak_for
from lackwalk.graph.instance import BipartiteInstance, build_instance
from lackwalk.shared.exceptions import FormulaError
from lackwalk.subspace.models import SubspaceModel, build_model

COMPLETE_FLAGS = ["--n1", "1000", "--n2", "800", "--k1", "3", "--l1", "1.2"]


def flipped_builder(inst: BipartiteInstance) -> SubspaceModel:
    model = build_model(inst)
    matrix = np.array(model.matrix)
    matrix[1, :] = -matrix[1, :]
    return replace(model, matrix=matrix)


def scaled_builder(inst: BipartiteInstance) -> SubspaceModel:
    model = build_model(inst)
    return replace(model, matrix=0.5 * model.matrix)


class CommandTestCase(TestCase):
    def setUp(self) -> None:
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def out(self, name: str) -> str:
        return str(Path(self.tmp.name) / name)

    def run_main(self, argv: List[str]) -> Tuple[int, str, str]:
        stdout, stderr = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            code = main(argv)
        return code, stdout.getvalue(), stderr.getvalue()


class SimulateTestCase(CommandTestCase):
    def test_peak_row(self) -> None:
        path = self.out("trace.csv")
        argv = ["simulate", *COMPLETE_FLAGS, "--init", "stationary", "--engine", "subspace", "--steps", "100", "--out", path]
        self.assertEqual(self.run_main(argv)[0], 0)
        trace = read_trace_csv(path)
        self.assertEqual(trace.horizon, 100)
        self.assertGreaterEqual(trace[41], 0.99)

    def test_zero_steps(self) -> None:
        path = self.out("trace.csv")
        cmd_simulate(build_config(["simulate", *COMPLETE_FLAGS, "--steps", "0", "--out", path]))
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        self.assertEqual(len(lines), 2)
        step, value = lines[1].split(",")
        self.assertEqual(step, "0")
        self.assertAlmostEqual(float(value), 3 / 1800, delta=1e-15)

    def test_engines_agree(self) -> None:
        small = ["--n1", "6", "--n2", "4", "--k1", "2", "--l1", "0.5", "--l2", "1", "--steps", "40"]
        for init in ("uniform", "stationary"):
            full = cmd_simulate(build_config(["simulate", *small, "--init", init, "--engine", "full", "--out", self.out("f.csv")]))
            reduced = cmd_simulate(build_config(["simulate", *small, "--init", init, "--out", self.out("s.csv")]))
            read_full = read_trace_csv(self.out("f.csv"))
            read_reduced = read_trace_csv(self.out("s.csv"))
            self.assertLessEqual(read_full.max_deviation(read_reduced), 1e-10)
            self.assertEqual(read_full.probs.tolist(), full.probs.tolist())
            self.assertEqual(read_reduced.probs.tolist(), reduced.probs.tolist())

    def test_invalid_instance_exit_code(self) -> None:
        code, _, err = self.run_main(["simulate", "--n1", "3", "--k1", "5"])
        self.assertEqual(code, 1)
        self.assertIn("k1=5 exceeds n1=3", err)

    def test_usage_exit_code(self) -> None:
        code, _, err = self.run_main(["simulate", "--init", "random"])
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("error:"))

    def test_unwritable_exit_code(self) -> None:
        code, _, _ = self.run_main(["simulate", "--steps", "3", "--out", self.out("missing/trace.csv")])
        self.assertEqual(code, 1)


class AnalyticTestCase(CommandTestCase):
    def test_one_set(self) -> None:
        values = dict(analytic_values(build_config(["analytic", *COMPLETE_FLAGS])))
        self.assertAlmostEqual(values["optimal_l1"], 1.2, delta=1e-12)
        self.assertAlmostEqual(values["t_star"], 40.6, delta=0.2)
        self.assertAlmostEqual(values["p_star"], 0.996904, delta=1e-4)
        self.assertAlmostEqual(values["optimal_l2"], 3.13725, delta=1e-3)
        self.assertAlmostEqual(values["threshold_n2"], 171.57, delta=0.01)
        self.assertAlmostEqual(values["loopless_p_star"], 1000 / 1800, delta=1e-12)

    def test_default_weights_use_optimal_l1(self) -> None:
        code, out, _ = self.run_main(["analytic", "--n1", "1000", "--n2", "800", "--k1", "3"])
        self.assertEqual(code, 0)
        values = {key: float(value) for key, value in (line.split(",") for line in out.splitlines()[1:])}
        self.assertAlmostEqual(values["optimal_l1"], 1.2, delta=1e-12)
        self.assertAlmostEqual(values["l1"], 1.2, delta=1e-12)
        self.assertAlmostEqual(values["t_star"], 40.6, delta=0.2)
        self.assertAlmostEqual(values["p_star"], 0.996904, delta=1e-4)

    def test_off_optimal_uniform_weight(self) -> None:
        tuned = dict(analytic_values(build_config(["analytic", *COMPLETE_FLAGS])))
        other = dict(analytic_values(build_config(["analytic", "--n1", "1000", "--n2", "800", "--k1", "3", "--l1", "5"])))
        self.assertEqual(other["t_star"], tuned["t_star"])
        self.assertEqual(other["l1"], tuned["l1"])

    def test_loopless_stationary(self) -> None:
        flags = ["--n1", "1000", "--n2", "800", "--k1", "3", "--init", "stationary"]
        code, _, _ = self.run_main(["analytic", *flags])
        self.assertEqual(code, 0)
        values = dict(analytic_values(build_config(["analytic", *flags])))
        self.assertEqual(values["p_star"], 0.5)
        self.assertEqual(values["t_star"], values["loopless_t_star"])
        self.assertEqual(values["l1"], 0.0)
        self.assertAlmostEqual(values["total_runtime"], 2 * values["t_star"], delta=1e-12)

    def test_y_marks(self) -> None:
        flags = ["--n1", "800", "--n2", "1000", "--k2", "3", "--k1", "0", "--l2", "1.2"]
        values = dict(analytic_values(build_config(["analytic", *flags])))
        self.assertAlmostEqual(values["p_star"], 0.996904, delta=1e-4)

    def test_symmetric(self) -> None:
        flags = ["--n1", "1000", "--n2", "1000", "--k1", "5", "--k2", "5", "--l1", "5", "--l2", "5"]
        values = dict(analytic_values(build_config(["analytic", *flags])))
        self.assertAlmostEqual(values["p_star"], 200 / 225, delta=1e-12)
        self.assertAlmostEqual(values["optimal_l1"], 5.0, delta=1e-12)

    def test_general_both_sets(self) -> None:
        flags = ["--n1", "500", "--n2", "1500", "--k1", "5", "--k2", "2"]
        with self.assertRaises(FormulaError):
            analytic_values(build_config(["analytic", *flags]))
        code, _, err = self.run_main(["analytic", *flags])
        self.assertEqual(code, 1)
        self.assertIn("use the subspace engine", err)

    def test_csv(self) -> None:
        path = self.out("values.csv")
        self.assertEqual(self.run_main(["analytic", *COMPLETE_FLAGS, "--out", path])[0], 0)
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "key,value")
        self.assertEqual([line.split(",")[0] for line in lines[1:6]], ["theta", "phi", "t_star", "p_star", "total_runtime"])


class HeatmapCommandTestCase(CommandTestCase):
    def test_single_cell(self) -> None:
        path = self.out("grid.csv")
        argv = ["heatmap", *COMPLETE_FLAGS, "--init", "stationary", "--l1-range", "1.2:1.2:1", "--l2-range", "0:0:1", "--steps", "100", "--out", path]
        self.assertEqual(self.run_main(argv)[0], 0)
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "l1,l2,t_star,p_star,T,loopless_T")
        self.assertEqual(len(lines), 2)
        l1, l2, t_star, p_star, runtime, _ = lines[1].split(",")
        peak = peak_for(build_instance(1000, 800, 1.2, 0.0, 3, 0), "stationary", 100)
        self.assertEqual((float(l1), float(l2)), (1.2, 0.0))
        self.assertEqual(int(t_star), peak.t_star)
        self.assertEqual(float(p_star), peak.p_star)
        self.assertEqual(float(runtime), peak.total_runtime)

    def test_rows_and_loopless_column(self) -> None:
        path = self.out("grid.csv")
        config = build_config(["heatmap", *COMPLETE_FLAGS, "--l1-range", "0:10:3", "--l2-range", "0:10:3", "--threads", "2", "--out", path])
        grid = cmd_heatmap(config)
        rows = [line.split(",") for line in Path(path).read_text(encoding="utf-8").splitlines()[1:]]
        self.assertEqual(len(rows), 9)
        self.assertEqual([row[0] for row in rows[:3]], ["0", "0", "0"])
        self.assertEqual(len({row[5] for row in rows}), 1)
        self.assertEqual(grid.shape, (3, 3))

    def test_empty_range(self) -> None:
        code, _, _ = self.run_main(["heatmap", "--l1-range", "0:10:0"])
        self.assertEqual(code, 2)

    def test_loopless_column_matches_reference(self) -> None:
        config = build_config(["heatmap", "--n1", "500", "--n2", "1500", "--k1", "2", "--k2", "5", "--l1-range", "0:8:3", "--l2-range", "0:8:3", "--out", self.out("g.csv")])
        grid = cmd_heatmap(config)
        rows = [line.split(",") for line in Path(self.out("g.csv")).read_text(encoding="utf-8").splitlines()[1:]]
        loopless = loopless_reference(build_instance(500, 1500, 0.0, 0.0, 2, 5), "uniform")
        self.assertEqual({float(row[5]) for row in rows}, {loopless.total_runtime})
        self.assertEqual(float(rows[0][4]), loopless.total_runtime)
        self.assertEqual([float(row[4]) for row in rows], grid.values("runtime").ravel().tolist())


class VerifyTestCase(CommandTestCase):
    def test_default_run_passes(self) -> None:
        code, out, _ = self.run_main(["verify"])
        self.assertEqual(code, 0, msg=out)
        self.assertNotIn("FAIL", out)
        self.assertIn("walk fixes the stationary state", out)

    def test_stationarity_is_reported(self) -> None:
        results = {result.name: result for result in run_checks()}
        stationarity = results["walk fixes the stationary state"]
        self.assertTrue(stationarity.passed)
        self.assertLess(stationarity.measured, 1e-12)

    def test_mutated_model_fails_cross_engine(self) -> None:
        [result] = check_cross_engine([build_instance(6, 4, 0.5, 2.0, 2, 0)], flipped_builder)
        self.assertFalse(result.passed)
        self.assertGreater(result.measured, 1e-10)
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            results = cmd_verify(build_config(["verify"]), flipped_builder)
        failed = [result.name for result in results if not result.passed]
        self.assertEqual(failed, ["full and subspace traces agree"])
        self.assertIn("FAIL", stdout.getvalue())
        self.assertTrue(math.isfinite(results[0].measured))

    def test_non_orthogonal_model_fails_unitarity(self) -> None:
        inst = build_instance(6, 4, 0.5, 2.0, 2, 0)
        drift, orthogonality = check_unitarity([inst], scaled_builder)
        self.assertTrue(drift.passed)
        self.assertFalse(orthogonality.passed)
        self.assertAlmostEqual(orthogonality.measured, 0.75, delta=1e-12)
