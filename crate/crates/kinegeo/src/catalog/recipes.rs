//! The contraction graph: algebra edges with per-block generator scales and
//! geometry edges with `(g, h, Γ)` prefactors, plus the edges whose domain
//! inequalities do not survive the limit.

use crate::contraction::{ContractionRecipe, RuleKind, Scale};
use crate::liefields::InvolutionKind;

const L_INF: RuleKind = RuleKind::LToInf;
const L_ZERO: RuleKind = RuleKind::LToZero;
const C_INF: RuleKind = RuleKind::CToInf;
const C_ZERO: RuleKind = RuleKind::CToZero;
const NU_INF: RuleKind = RuleKind::NuFixedInf;
const NU_ZERO: RuleKind = RuleKind::NuFixedZero;
const CCL_INF: RuleKind = RuleKind::CcOverLFixedInf;
const CCL_ZERO: RuleKind = RuleKind::CcOverLFixedZero;
const CLL_INF: RuleKind = RuleKind::COverLlFixedInf;
const CLL_ZERO: RuleKind = RuleKind::COverLlFixedZero;
const NU_INF_L_ZERO: RuleKind = RuleKind::NuInfLZero;
const NU_ZERO_L_INF: RuleKind = RuleKind::NuZeroLInf;

const PI: InvolutionKind = InvolutionKind::Parity;
const THETA: InvolutionKind = InvolutionKind::TimeReversal;
const PI_THETA: InvolutionKind = InvolutionKind::Composite;

const ONE: Scale = Scale::ONE;

const fn s(sign: i8, order: i32) -> Scale {
    Scale::new(sign, order)
}

fn alg(src: &str, dst: &str, rule: RuleKind, pre: Option<InvolutionKind>, scales: [Scale; 3]) -> ContractionRecipe {
    ContractionRecipe::algebra(src, dst, rule, pre, scales)
}

fn geo(src: &str, dst: &str, rule: RuleKind, scales: [Scale; 3]) -> ContractionRecipe {
    ContractionRecipe::geometry(src, dst, rule, scales)
}

fn blocked(src: &str, dst: &str, rule: RuleKind) -> ContractionRecipe {
    ContractionRecipe::blocked(src, dst, rule)
}

/// Algebra edges; scales are for the time, translation and boost blocks.
pub fn algebra_recipes() -> Vec<ContractionRecipe> {
    vec![
    // d±, r, l under l → ∞ and l → 0
    alg("d_+", "p", L_INF, None, [ONE, ONE, ONE]),
    alg("d_-", "p", L_INF, None, [ONE, ONE, ONE]),
    alg("d_+", "p2", L_ZERO, None, [s(1, 2), s(1, 2), ONE]),
    alg("d_-", "p2", L_ZERO, None, [s(-1, 2), s(-1, 2), ONE]),
    alg("r", "e", L_INF, None, [ONE, ONE, ONE]),
    alg("l", "e", L_INF, None, [ONE, ONE, ONE]),
    alg("r", "e2", L_ZERO, None, [s(1, 2), s(1, 2), ONE]),
    alg("l", "e2", L_ZERO, None, [s(-1, 2), s(-1, 2), ONE]),
    // Newton–Hooke, ν fixed
    alg("d_+", "n_+", NU_INF, None, [ONE, ONE, ONE]),
    alg("l", "n_+", NU_INF, Some(PI), [ONE, s(-1, 0), s(-1, 0)]),
    alg("d_+", "n_+2", NU_ZERO, None, [ONE, s(1, 2), s(1, 2)]),
    alg("l", "n_+2", NU_ZERO, Some(PI), [ONE, s(1, 2), s(1, 2)]),
    alg("d_-", "n_-", NU_INF, Some(PI_THETA), [s(-1, 0), s(-1, 0), ONE]),
    alg("r", "n_-", NU_INF, Some(THETA), [s(-1, 0), ONE, s(-1, 0)]),
    alg("d_-", "n_-2", NU_ZERO, Some(PI_THETA), [ONE, s(1, 2), s(1, 2)]),
    alg("r", "n_-2", NU_ZERO, Some(THETA), [ONE, s(1, 2), s(1, 2)]),
    // Hooke–Newton and para algebras
    alg("d_+", "h_+", C_ZERO, None, [ONE, ONE, s(1, 2)]),
    alg("d_-", "h_-", C_ZERO, None, [ONE, ONE, s(1, 2)]),
    alg("d_+", "e'", C_INF, None, [s(1, 2), ONE, ONE]),
    alg("d_-", "p'", C_INF, None, [s(1, 2), ONE, ONE]),
    alg("r", "h_+", C_ZERO, Some(THETA), [s(-1, 0), ONE, s(1, 2)]),
    alg("l", "h_-", C_ZERO, Some(THETA), [s(-1, 0), ONE, s(1, 2)]),
    alg("r", "e'", C_INF, Some(THETA), [s(1, 2), ONE, s(-1, 0)]),
    alg("l", "p'", C_INF, Some(THETA), [s(1, 2), ONE, s(-1, 0)]),
    // Galilei and Carroll
    alg("d_+", "g", CCL_INF, None, [ONE, ONE, ONE]),
    alg("d_-", "g", CCL_INF, None, [ONE, ONE, ONE]),
    alg("r", "g", CCL_INF, None, [ONE, ONE, ONE]),
    alg("l", "g", CCL_INF, None, [ONE, ONE, ONE]),
    alg("e", "g", C_INF, None, [ONE, ONE, ONE]),
    alg("p", "g", C_INF, None, [ONE, ONE, ONE]),
    alg("n_+", "g", L_INF, None, [ONE, ONE, ONE]),
    alg("n_-", "g", L_INF, None, [ONE, ONE, ONE]),
    alg("d_+", "c", NU_ZERO_L_INF, None, [ONE, ONE, s(1, 2)]),
    alg("d_-", "c", NU_ZERO_L_INF, None, [ONE, ONE, s(1, 2)]),
    alg("h_+", "c", L_INF, None, [ONE, ONE, ONE]),
    alg("h_-", "c", L_INF, None, [ONE, ONE, ONE]),
    alg("p", "c", C_ZERO, None, [ONE, ONE, s(1, 2)]),
    alg("e", "c", C_ZERO, Some(THETA), [s(-1, 0), ONE, s(1, 2)]),
    // second Galilei and second Carroll
    alg("d_+", "g2", CCL_ZERO, None, [s(1, 2), s(1, 4), s(1, 2)]),
    alg("d_-", "g2", CCL_ZERO, None, [s(-1, 2), s(-1, 4), s(1, 2)]),
    alg("r", "g2", CCL_ZERO, Some(THETA), [s(1, 2), s(1, 4), s(1, 2)]),
    alg("l", "g2", CCL_ZERO, Some(PI), [s(1, 2), s(1, 4), s(1, 2)]),
    alg("e2", "g2", C_ZERO, Some(THETA), [s(1, -2), ONE, s(1, 2)]),
    alg("p2", "g2", C_ZERO, Some(THETA), [s(-1, -2), ONE, s(-1, 2)]),
    alg("n_+2", "g2", L_ZERO, None, [s(1, 2), s(1, 2), ONE]),
    alg("n_-2", "g2", L_ZERO, None, [s(1, 2), s(1, 2), ONE]),
    alg("d_+", "c2", NU_INF_L_ZERO, None, [s(1, 4), s(1, 2), ONE]),
    alg("d_-", "c2", NU_INF_L_ZERO, None, [s(-1, 4), s(-1, 2), ONE]),
    alg("e'", "c2", L_ZERO, None, [s(1, 2), s(1, 2), ONE]),
    alg("p'", "c2", L_ZERO, None, [s(-1, 2), s(-1, 2), ONE]),
    alg("p2", "c2", C_INF, None, [s(1, 2), ONE, ONE]),
    alg("e2", "c2", C_INF, None, [s(-1, 2), ONE, ONE]),
    // para-Galilei and second para-Galilei
    alg("d_+", "g'", CLL_INF, None, [s(1, 2), ONE, ONE]),
    alg("d_-", "g'", CLL_INF, None, [s(-1, 2), ONE, ONE]),
    alg("r", "g'", CLL_INF, None, [s(-1, 2), ONE, ONE]),
    alg("l", "g'", CLL_INF, None, [s(1, 2), ONE, ONE]),
    alg("n_+", "g'", L_ZERO, None, [s(1, 2), ONE, ONE]),
    alg("n_-", "g'", L_ZERO, None, [s(-1, 2), ONE, ONE]),
    alg("e'", "g'", L_INF, None, [s(1, -2), ONE, ONE]),
    alg("p'", "g'", L_INF, Some(PI), [s(-1, -2), s(-1, 0), s(-1, 0)]),
    alg("d_+", "g'2", CLL_ZERO, None, [ONE, s(1, 2), s(1, 4)]),
    alg("d_-", "g'2", CLL_ZERO, Some(PI_THETA), [s(-1, 0), s(1, 2), s(1, 4)]),
    alg("r", "g'2", CLL_ZERO, Some(THETA), [s(-1, 0), s(1, 2), s(1, 4)]),
    alg("l", "g'2", CLL_ZERO, Some(PI), [ONE, s(1, 2), s(1, 4)]),
    alg("n_+2", "g'2", C_ZERO, None, [ONE, ONE, s(1, 2)]),
    alg("n_-2", "g'2", C_ZERO, None, [s(-1, 0), ONE, s(1, 2)]),
    alg("h_+", "g'2", L_ZERO, None, [ONE, s(1, 2), ONE]),
    alg("h_-", "g'2", L_ZERO, Some(PI), [ONE, s(1, 2), s(-1, 0)]),
    ]
}

/// Geometry edges; scales are for `g`, `h` and `Γ`.
pub fn geometry_recipes() -> Vec<ContractionRecipe> {
    vec![
    geo("dS", "Min", L_INF, [s(1, 0), s(1, 0), s(1, 0)]),
    geo("AdS", "Min", L_INF, [s(1, 0), s(1, 0), s(1, 0)]),
    geo("Riem", "Euc", L_INF, [s(1, 0), s(1, 0), s(1, 0)]),
    geo("Lob", "Euc", L_INF, [s(1, 0), s(1, 0), s(1, 0)]),
    blocked("LBdS", "Euc", L_INF),
    blocked("BdSL", "Min", L_INF),
    blocked("DTdS", "Min", L_INF),
    geo("Riem", "E_2", L_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    geo("LBdS", "E_2-", L_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    geo("dS", "P_2+", L_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    geo("AdS", "P_2-", L_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    geo("BdSL", "EP_2-", L_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    geo("DTdS", "DTP_2+", L_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    blocked("Lob", "E_2", L_ZERO),
    geo("dS", "NH_+", NU_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("AdS", "NH_-", NU_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("Lob", "ENH_+", NU_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("Riem", "ENH_-", NU_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("LBdS", "NH_+'", NU_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("BdSL", "ENH_+'", NU_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    blocked("DTdS", "NH_+", NU_INF),
    geo("dS", "NH_2", NU_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    geo("LBdS", "NH_2'", NU_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    geo("Riem", "ENH_2", NU_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    geo("DTdS", "DTNH_2", NU_ZERO, [s(1, -2), s(1, 4), s(1, 0)]),
    blocked("AdS", "NH_2", NU_ZERO),
    blocked("Lob", "ENH_2", NU_ZERO),
    blocked("BdSL", "NH_2'", NU_ZERO),
    geo("dS", "HN_+", C_ZERO, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("AdS", "HN_-", C_ZERO, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("Riem", "EHN_+", C_ZERO, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("Lob", "EHN_-", C_ZERO, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("LBdS", "HN_-'", C_ZERO, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("DTdS", "DTHN", C_ZERO, [s(1, 0), s(1, 2), s(1, 0)]),
    blocked("BdSL", "HN_-'", C_ZERO),
    geo("Riem", "E'", C_INF, [s(1, -2), s(1, 2), s(1, 0)]),
    geo("AdS", "P'", C_INF, [s(1, -2), s(1, 2), s(1, 0)]),
    geo("LBdS", "P'", C_INF, [s(-1, -2), s(-1, 2), s(1, 0)]),
    geo("BdSL", "E'", C_INF, [s(1, -2), s(1, 2), s(1, 0)]),
    blocked("dS", "P'", C_INF),
    blocked("Lob", "E'", C_INF),
    blocked("DTdS", "P'", C_INF),
    geo("Min", "G", C_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("Min", "C", C_ZERO, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("Euc", "EG", C_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("Euc", "EC", C_ZERO, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("dS", "G", CCL_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("AdS", "G", CCL_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("Riem", "EG", CCL_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    geo("Lob", "EG", CCL_INF, [s(1, 2), s(1, 0), s(1, 0)]),
    blocked("LBdS", "EG", CCL_INF),
    blocked("BdSL", "G", CCL_INF),
    blocked("DTdS", "G", CCL_INF),
    geo("dS", "C", NU_ZERO_L_INF, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("AdS", "C", NU_ZERO_L_INF, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("Riem", "EC", NU_ZERO_L_INF, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("Lob", "EC", NU_ZERO_L_INF, [s(1, 0), s(1, 2), s(1, 0)]),
    blocked("LBdS", "EC", NU_ZERO_L_INF),
    blocked("BdSL", "C", NU_ZERO_L_INF),
    blocked("DTdS", "C", NU_ZERO_L_INF),
    geo("dS", "EG_2", CCL_ZERO, [s(-1, -4), s(-1, 8), s(1, 0)]),
    geo("Riem", "EG_2", CCL_ZERO, [s(1, -4), s(1, 8), s(1, 0)]),
    geo("LBdS", "G_2", CCL_ZERO, [s(1, -4), s(1, 8), s(1, 0)]),
    geo("DTdS", "G_2", CCL_ZERO, [s(-1, -4), s(-1, 8), s(1, 0)]),
    blocked("Lob", "EG_2", CCL_ZERO),
    blocked("AdS", "G_2", CCL_ZERO),
    blocked("BdSL", "G_2", CCL_ZERO),
    geo("P_2+", "EG_2", C_ZERO, [s(-1, 0), s(-1, 0), s(1, 0)]),
    geo("NH_2", "EG_2", L_ZERO, [s(-1, -2), s(-1, 4), s(1, 0)]),
    geo("AdS", "C_2", NU_INF_L_ZERO, [s(1, -4), s(1, 6), s(1, 0)]),
    geo("LBdS", "C_2", NU_INF_L_ZERO, [s(-1, -4), s(-1, 6), s(1, 0)]),
    geo("Riem", "EC_2", NU_INF_L_ZERO, [s(1, -4), s(1, 6), s(1, 0)]),
    geo("BdSL", "EC_2", NU_INF_L_ZERO, [s(1, -4), s(1, 6), s(1, 0)]),
    blocked("Lob", "EC_2", NU_INF_L_ZERO),
    blocked("DTdS", "C_2", NU_INF_L_ZERO),
    blocked("dS", "C_2", NU_INF_L_ZERO),
    geo("P_2-", "C_2", C_INF, [s(1, -2), s(1, 2), s(1, 0)]),
    geo("LBdS", "G'", CLL_INF, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("AdS", "G'", CLL_INF, [s(-1, 0), s(-1, 2), s(1, 0)]),
    geo("Riem", "EG'", CLL_INF, [s(1, 0), s(1, 2), s(1, 0)]),
    geo("BdSL", "EG'", CLL_INF, [s(1, 0), s(1, 2), s(1, 0)]),
    blocked("dS", "G'", CLL_INF),
    blocked("DTdS", "G'", CLL_INF),
    blocked("Lob", "EG'", CLL_INF),
    geo("P'", "G'", L_INF, [s(-1, 4), s(-1, -2), s(1, 0)]),
    geo("E'", "EG'", L_INF, [s(1, 4), s(1, -2), s(1, 0)]),
    geo("Riem", "EG_2'", CLL_ZERO, [s(1, -2), s(1, 6), s(1, 0)]),
    geo("LBdS", "EG_2'", CLL_ZERO, [s(1, -2), s(1, 6), s(1, 0)]),
    geo("dS", "G_2'", CLL_ZERO, [s(1, -2), s(1, 6), s(1, 0)]),
    geo("DTdS", "G_2'", CLL_ZERO, [s(1, -2), s(1, 6), s(1, 0)]),
    blocked("BdSL", "G_2'", CLL_ZERO),
    blocked("AdS", "G_2'", CLL_ZERO),
    blocked("Lob", "EG_2'", CLL_ZERO),
    geo("NH_2", "G_2'", L_INF, [s(1, 2), s(1, -2), s(1, 0)]),
    ]
}

/// Every built-in edge, algebras first.
pub fn builtin_recipes() -> Vec<ContractionRecipe> {
    let mut v = algebra_recipes();
    v.extend(geometry_recipes());
    v
}
