"""Zero-propagation certificates and rewrite chains."""

import json
from random import Random

import pytest

from veronese import (
    Binomial2,
    ContractError,
    MultiIndex,
    PrimeField,
    PropagationStep,
    QQ,
    RewriteChain,
    VeroneseContext,
    ZeroPropagationCertificate,
    all_rewrite_chains,
    chain_from_doc,
    chain_to_doc,
    point,
    propagation_from_doc,
    propagation_to_doc,
    pure_power,
    random_point,
    rewrite_chain,
    verify_rewrite_chain,
    verify_zero_propagation,
    veronese_eval,
    zero_propagation_certificate,
)


def image_point_on_chart(rng, field, ctx, i):
    x = random_point(rng, field, ctx.n)
    if not x.coords[i]:
        coords = list(x.coords)
        coords[i] = field.one
        x = point(field, coords)
    return veronese_eval(ctx, x)


class TestZeroPropagationGeneration:
    def test_conic_single_step(self):
        cert = zero_propagation_certificate(VeroneseContext(1, 2))
        assert len(cert.steps) == 1
        step = cert.steps[0]
        assert tuple(step.target) == (1, 1)
        assert str(step.minor) == "z_{2,0} z_{0,2} - z_{1,1}^2"
        assert {tuple(p) for p in step.prerequisites} == {(2, 0), (0, 2)}

    def test_twisted_cubic_cascade(self):
        cert = zero_propagation_certificate(VeroneseContext(1, 3))
        assert [tuple(s.target) for s in cert.steps] == [(2, 1), (1, 2)]
        assert str(cert.steps[0].minor) == "z_{3,0} z_{1,2} - z_{2,1}^2"
        # (2,1) is zeroed only from the assumed-zero pure power
        assert [tuple(p) for p in cert.steps[0].prerequisites] == [(3, 0)]

    @pytest.mark.parametrize("n", range(1, 4))
    @pytest.mark.parametrize("d", range(2, 5))
    def test_coverage(self, n, d):
        ctx = VeroneseContext(n, d)
        cert = zero_propagation_certificate(ctx)
        covered = set(ctx.pure_powers()) | set(cert.targets())
        assert covered == set(ctx.monomials())
        # targets are pairwise distinct
        assert len(set(cert.targets())) == len(cert.steps)

    def test_degree_one_is_empty_and_complete(self):
        ctx = VeroneseContext(2, 1)
        cert = zero_propagation_certificate(ctx)
        assert cert.steps == ()
        assert verify_zero_propagation(ctx, cert)


class TestZeroPropagationVerification:
    @pytest.mark.parametrize("n", range(1, 4))
    @pytest.mark.parametrize("d", range(2, 5))
    def test_generated_certificates_verify(self, n, d):
        ctx = VeroneseContext(n, d)
        assert verify_zero_propagation(ctx, zero_propagation_certificate(ctx))

    def test_non_minor_rejected(self):
        ctx = VeroneseContext(1, 3)
        cert = zero_propagation_certificate(ctx)
        # balanced quadric on degree-4 coordinates: never a minor here
        foreign = Binomial2.canonical(
            (MultiIndex((4, 0)), MultiIndex((2, 2))), (MultiIndex((3, 1)), MultiIndex((3, 1)))
        )
        tampered = ZeroPropagationCertificate(
            ctx,
            (PropagationStep(cert.steps[0].target, foreign, cert.steps[0].prerequisites),)
            + cert.steps[1:],
        )
        res = verify_zero_propagation(ctx, tampered)
        assert not res
        assert "not a 2-minor" in res.diagnostic

    def test_reordered_steps_rejected(self):
        ctx = VeroneseContext(1, 3)
        cert = zero_propagation_certificate(ctx)
        reordered = ZeroPropagationCertificate(ctx, tuple(reversed(cert.steps)))
        res = verify_zero_propagation(ctx, reordered)
        assert not res
        assert "not yet established" in res.diagnostic or "known zero" in res.diagnostic

    def test_incomplete_coverage_rejected(self):
        ctx = VeroneseContext(1, 3)
        cert = zero_propagation_certificate(ctx)
        truncated = ZeroPropagationCertificate(ctx, cert.steps[:1])
        res = verify_zero_propagation(ctx, truncated)
        assert not res
        assert "coverage" in res.diagnostic

    def test_context_mismatch_rejected(self):
        cert = zero_propagation_certificate(VeroneseContext(1, 3))
        assert not verify_zero_propagation(VeroneseContext(1, 2), cert)


class TestRewriteChainGeneration:
    def test_twisted_cubic_chain(self):
        ctx = VeroneseContext(1, 3)
        chain = rewrite_chain(ctx, 0, MultiIndex((0, 3)))
        assert [str(b) for b in chain.steps] == [
            "z_{3,0} z_{1,2} - z_{2,1}^2",
            "z_{3,0} z_{0,3} - z_{2,1} z_{1,2}",
        ]

    def test_pure_power_target_gives_empty_chain(self):
        for n, d in [(1, 2), (2, 3), (3, 2)]:
            ctx = VeroneseContext(n, d)
            for i in range(n + 1):
                assert rewrite_chain(ctx, i, pure_power(n, d, i)).steps == ()

    def test_single_cross_minor(self):
        ctx = VeroneseContext(2, 3)
        chain = rewrite_chain(ctx, 0, MultiIndex((1, 1, 1)))
        assert len(chain.steps) == 1
        assert str(chain.steps[0]) == "z_{3,0,0} z_{1,1,1} - z_{2,1,0} z_{2,0,1}"

    def test_wrong_degree_rejected(self):
        with pytest.raises(ContractError):
            rewrite_chain(VeroneseContext(1, 3), 0, MultiIndex((1, 1)))

    def test_chain_length(self):
        # sum of off-chart exponents minus one, empty when m_i >= d-1
        ctx = VeroneseContext(2, 4)
        for m in ctx.monomials():
            for i in range(3):
                k = sum(e for j, e in enumerate(m) if j != i)
                assert len(rewrite_chain(ctx, i, m).steps) == max(0, k - 1)


class TestRewriteChainVerification:
    @pytest.mark.parametrize("field", [QQ, PrimeField(7)])
    @pytest.mark.parametrize("n", range(1, 3))
    @pytest.mark.parametrize("d", range(1, 5))
    def test_generated_chains_verify(self, field, n, d):
        ctx = VeroneseContext(n, d)
        rng = Random(17)
        for i in range(n + 1):
            Q = image_point_on_chart(rng, field, ctx, i)
            for m in ctx.monomials():
                assert verify_rewrite_chain(ctx, rewrite_chain(ctx, i, m), Q)

    def test_all_chains_iterator(self):
        ctx = VeroneseContext(1, 3)
        chains = list(all_rewrite_chains(ctx))
        assert len(chains) == 2 * 4

    def test_chart_unavailable_reported(self):
        ctx = VeroneseContext(1, 2)
        chain = rewrite_chain(ctx, 0, MultiIndex((0, 2)))
        Q = veronese_eval(ctx, point(QQ, [0, 1]))  # chart 0 pure power is zero
        res = verify_rewrite_chain(ctx, chain, Q)
        assert not res
        assert "precondition" in res.diagnostic

    def test_tampered_chain_rejected(self):
        ctx = VeroneseContext(1, 3)
        chain = rewrite_chain(ctx, 0, MultiIndex((0, 3)))
        Q = veronese_eval(ctx, point(QQ, [1, 2]))
        # swap a step for another genuine minor that breaks the telescoping
        foreign = next(iter(rewrite_chain(ctx, 1, MultiIndex((3, 0))).steps))
        tampered = RewriteChain(ctx, 0, chain.target, (chain.steps[0], foreign))
        assert not verify_rewrite_chain(ctx, tampered, Q)

    def test_off_row_minor_rejected(self):
        # a genuine minor with no entries on row 0 / the pure-power column
        ctx = VeroneseContext(2, 2)
        chain = rewrite_chain(ctx, 0, MultiIndex((0, 1, 1)))
        Q = veronese_eval(ctx, point(QQ, [1, 2, 3]))
        foreign = Binomial2.canonical(
            (MultiIndex((0, 2, 0)), MultiIndex((0, 0, 2))),
            (MultiIndex((0, 1, 1)), MultiIndex((0, 1, 1))),
        )
        tampered = RewriteChain(ctx, 0, chain.target, chain.steps + (foreign,))
        res = verify_rewrite_chain(ctx, tampered, Q)
        assert not res
        assert "realization" in res.diagnostic

    def test_truncated_chain_rejected(self):
        ctx = VeroneseContext(1, 4)
        chain = rewrite_chain(ctx, 0, MultiIndex((0, 4)))
        Q = veronese_eval(ctx, point(QQ, [2, 3]))
        truncated = RewriteChain(ctx, 0, chain.target, chain.steps[:-1])
        res = verify_rewrite_chain(ctx, truncated, Q)
        assert not res


class TestSerialization:
    def test_propagation_roundtrip_and_stability(self):
        ctx = VeroneseContext(2, 3)
        cert = zero_propagation_certificate(ctx)
        doc = propagation_to_doc(cert)
        assert propagation_from_doc(doc) == cert
        assert json.dumps(doc, sort_keys=True) == json.dumps(
            propagation_to_doc(zero_propagation_certificate(ctx)), sort_keys=True
        )

    def test_chain_roundtrip(self):
        ctx = VeroneseContext(2, 3)
        chain = rewrite_chain(ctx, 1, MultiIndex((1, 1, 1)))
        assert chain_from_doc(chain_to_doc(chain)) == chain

    def test_malformed_document_rejected(self):
        with pytest.raises(ContractError):
            propagation_from_doc({"schema_version": 1, "kind": "zero-propagation"})
