"""验证流水线：按依赖顺序驱动各项计算并生成报告。"""

from __future__ import annotations

import logging
import time
from typing import Callable, Dict, List, Optional

from .admissibility import WitnessError, check_admissible, pi_check, witness_coroots
from .affine_lie import RealRoot, affine_pairing, dot_reflect, vacuum_weight
from .classification import SupportSet, all_supports, verify_classification
from .enveloping import (
    AdjointModule,
    ClosureError,
    UEAElement,
    act_on_highest_weight,
    adjoint_chain_polynomial,
    closed_form_polynomial,
    compare_zhu_image,
    enveloping_algebra,
    generate_R,
    lemma_relations,
    project_to_polynomial,
    zero_weight_span_matches,
)
from .models import Outcome, RunConfig
from .polynomial import CartanPolynomial, span_rank
from .report import Report
from .root_system import Weight, highest_root, root_weight, simple_roots, weyl_vector
from .verma import is_singular, singular_vector, vacuum_module

logger = logging.getLogger(__name__)

COMMANDS = ("verify-singular", "zhu", "polynomials", "classify", "admissible", "all")


class Verifier:
    """一次运行的全部验证；中间结果（F([v])、R、p_i）在命令之间共享。"""

    def __init__(self, config: RunConfig) -> None:
        self.config = config.validate()
        self.l = config.l
        self._generator: Optional[UEAElement] = None
        self._module: Optional[AdjointModule] = None
        self._polys: Optional[List[CartanPolynomial]] = None

    # ----------------------------------------------------------- dispatch --
    def run(self, command: str) -> Report:
        handlers: Dict[str, Callable[[], Report]] = {
            "verify-singular": self.verify_singular,
            "zhu": self.zhu,
            "polynomials": self.polynomials,
            "classify": self.classify,
            "admissible": self.admissible,
            "all": self.run_all,
        }
        if command not in handlers:
            raise KeyError(command)
        started = time.perf_counter()
        report = handlers[command]()
        report.timing_ms = (time.perf_counter() - started) * 1000
        logger.info("%s (l=%d)：%s，用时 %.1f ms", command, self.l, report.outcome.value, report.timing_ms)
        return report

    def _report(self, command: str, outcome: Outcome, payload: dict) -> Report:
        return Report(command=command, params=self.config.params(), outcome=outcome, payload=payload)

    # ------------------------------------------------------- shared state --
    def generator(self) -> UEAElement:
        if self._generator is None:
            self._generator = compare_zhu_image(self.l).computed
        return self._generator

    def adjoint_module(self) -> AdjointModule:
        if self._module is None:
            self._module = generate_R(self.l, self.generator(), margin=self.config.closure_margin)
        return self._module

    def computed_polynomials(self) -> List[CartanPolynomial]:
        if self._polys is None:
            self._polys = [adjoint_chain_polynomial(self.l, i, self.generator()) for i in range(1, self.l + 1)]
        return self._polys

    # ------------------------------------------------------------ singular --
    def verify_singular(self) -> Report:
        l = self.l
        module = vacuum_module(l)
        v = singular_vector(l)
        singularity = is_singular(v)
        weight = module.affine_weight_of(v)
        reflected = dot_reflect(vacuum_weight(l), RealRoot(highest_root(l).negate(), 2))
        # r_{α_i}.λ = λ − α_i 的分量；次数 0 只有真空向量，维数恒为 0，只作记录
        lower_pieces = {
            str(alpha): module.graded_piece_dimension(0, root_weight(l, alpha).scale(-1)) for alpha in simple_roots(l)
        }
        ok = singularity.is_singular and weight == reflected
        payload = {
            "vector": v.render(module.algebra),
            "term_count": len(v.terms),
            "conformal_degree": v.degrees(),
            "annihilators": {label: result.render(module.algebra) for label, result in singularity.checks},
            "failures": singularity.failures(),
            "affine_weight": str(weight),
            "reflected_weight": str(reflected),
            "lower_piece_dimensions": lower_pieces,
        }
        return self._report("verify-singular", Outcome.of(ok), payload)

    # ----------------------------------------------------------------- zhu --
    def zhu(self) -> Report:
        comparison = compare_zhu_image(self.l)
        algebra = enveloping_algebra(self.l).algebra
        self._generator = comparison.computed
        payload = {
            "computed": comparison.computed.render(algebra),
            "displayed": comparison.displayed.render(algebra),
            "difference": comparison.difference.render(algebra),
            "raw": [
                {"coeff": coeff, "word": " ".join(algebra.name(i) for i in word)} for coeff, word in comparison.raw
            ],
            "term_count": len(comparison.computed.terms),
            "matches": comparison.matches,
        }
        return self._report("zhu", Outcome.of(comparison.matches), payload)

    # --------------------------------------------------------- polynomials --
    def polynomials(self) -> Report:
        l = self.l
        polys = self.computed_polynomials()
        closed = [closed_form_polynomial(l, i) for i in range(1, l + 1)]
        relations = lemma_relations(l)
        failures: List[str] = []
        for i, (poly, expected) in enumerate(zip(polys, closed), start=1):
            if poly != expected:
                failures.append(f"p_{i}：伴随链 {poly}，闭式 {expected}")
        failures += [f"{r.name}(i={r.i}, j={r.j}) 不成立" for r in relations if not r.holds]
        try:
            module = self.adjoint_module()
        except ClosureError as exc:
            failures.append(str(exc))
            module = None
        dims: Dict[str, object] = {"expected_R": (l + 1) ** 2 - 1, "expected_R0": l}
        if module is not None:
            dims.update(R=module.dimension, R0=len(module.zero_weight_basis))
            if module.dimension != (l + 1) ** 2 - 1 or len(module.zero_weight_basis) != l:
                failures.append(f"dim R = {module.dimension}，dim R₀ = {len(module.zero_weight_basis)}")
            if not zero_weight_span_matches(l, module, polys):
                failures.append("R₀ 的投影与 span{p_i} 不一致")
            failures += self._projection_oracle(module)
        rank = span_rank(polys)
        if rank != l:
            failures.append(f"span{{p_i}} 的秩为 {rank}")
        payload = {
            "polynomials": [str(p) for p in polys],
            "closed_forms": [str(p) for p in closed],
            "span_rank": rank,
            "dimensions": dims,
            "lemma_relations": [{"name": r.name, "i": r.i, "j": r.j, "holds": r.holds} for r in relations],
            "failures": failures,
        }
        return self._report("polynomials", Outcome.of(not failures), payload)

    def _projection_oracle(self, module: AdjointModule) -> List[str]:
        """用 Verma 模上的直接作用复核 R₀ 各元素的投影。"""

        l = self.l
        samples = [weyl_vector(l), Weight.fundamental(l, 1), weyl_vector(l).scale(-2)]
        failures: List[str] = []
        for r in module.zero_weight_basis:
            poly = project_to_polynomial(r)
            for mu in samples:
                acted = act_on_highest_weight(r, mu)
                stray = {word: c for word, c in acted.items() if word and c}
                if stray or acted.get((), 0) != poly.evaluate_weight(mu):
                    failures.append(f"投影 {poly} 在 μ={mu} 处与直接作用不一致")
        return failures

    # ------------------------------------------------------------ classify --
    def classify(self) -> Report:
        report = verify_classification(self.l, self.computed_polynomials())
        rows = report.rows
        if self.config.subset is not None:
            rows = [row for row in rows if row.support.elements == self.config.subset]
        payload = {
            "rows": [
                {
                    "support": str(row.support),
                    "mu": str(row.mu),
                    "solved": [str(w) for w in row.solved],
                    "dominant_integral": row.dominant_integral,
                    "elimination_factor": row.elimination_factor,
                    "notes": row.notes,
                }
                for row in rows
            ],
            "solution_count": len(report.oracle_weights),
            "dominant_supports": [str(s) for s in report.dominant_supports],
            "failures": report.failures,
        }
        return self._report("classify", report.outcome, payload)

    # ---------------------------------------------------------- admissible --
    def _supports(self) -> List[SupportSet]:
        if self.config.subset is not None:
            return [SupportSet(self.l, self.config.subset)]
        return all_supports(self.l)

    def admissible(self) -> Report:
        l = self.l
        outcomes: List[Outcome] = []
        rows = []
        for support in self._supports():
            result = check_admissible(l, support, self.config.max_m)
            try:
                witnesses = [str(root) for root in witness_coroots(l, support)]
                witness_error = None
            except WitnessError as exc:
                witnesses, witness_error = [], str(exc)
            verdict = result.verdict if witness_error is None else Outcome.FAIL
            outcomes.append(verdict)
            rows.append(
                {
                    "support": str(support),
                    "verdict": verdict,
                    "violations": [{"root": str(root), "value": value} for root, value in result.violations],
                    "integer_paired_count": len(result.integer_paired),
                    "rank_of_span": result.rank_of_span,
                    "last_nonpositive_m": result.certificate.bound,
                    "witnesses": witnesses,
                    "witness_error": witness_error,
                }
            )
        pi = pi_check(l, self.config.pi_max_m)
        outcomes.append(pi.outcome)
        weight = vacuum_weight(l)
        payload = {
            "supports": rows,
            "pi_check": {
                "max_m": pi.max_m,
                "outcome": pi.outcome,
                "minimal": [str(root) for root in pi.minimal],
                "expected": [str(root) for root in pi.expected],
                "uncertified": [str(root) for root in pi.uncertified],
                "shifted_pairings": {str(root): value for root, value in pi.shifted_pairings.items()},
                "alpha0_pairing": affine_pairing(weight, RealRoot(highest_root(l).negate(), 1)),
            },
        }
        return self._report("admissible", Outcome.combine(*outcomes), payload)

    # ----------------------------------------------------------------- all --
    def run_all(self) -> Report:
        sections = [self.run(command) for command in COMMANDS if command != "all"]
        return self._report("all", Outcome.combine(*(s.outcome for s in sections)), {"sections": sections})
