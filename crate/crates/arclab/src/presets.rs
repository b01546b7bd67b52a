//! Named, fully self-checking amalgam presets.
//!
//! Every preset re-derives all of its expected values (orders,
//! intersections, transitivity, diagonal verdicts) by exact chain
//! computation; nothing is trusted from a fixture or from the way a
//! generator was found.  Searches are deterministic: breadth-first
//! scans over group elements in generator-word order, taking the first
//! candidate that passes every structural test.

use crate::arcs::{is_locally_2at_amalgam, is_locally_s_arc_transitive_bounded, DEFAULT_MAX_ARCS};
use crate::coset::{coset_action, DEFAULT_MAX_INDEX};
use crate::construct::{construct_3_1, construct_straight_nondiagonal, ConstructionOutput};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::graph::{build_coset_graph_bounded, CosetGraph};
use crate::group::{PermGroup, ENUM_THRESHOLD};
use crate::groups::{borel_subgroup, make_psl2, make_standard, mobius_perm, subfield_psl2, StandardKind};
use crate::io::load_generators;
use crate::pa::{classify_diagonal, pa_report, DiagonalVerdict, ProductGroup};
use crate::perm::Perm;
use crate::report::Report;
use crate::wreath::WreathFrame;
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::{HashSet, VecDeque};
use std::path::{Path, PathBuf};

/// Computation bounds shared by all presets, surfaced as CLI flags.
#[derive(Clone, Copy, Debug)]
pub struct Thresholds {
    pub max_index: usize,
    pub max_arcs: usize,
    pub max_enum: usize,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            max_index: DEFAULT_MAX_INDEX,
            max_arcs: DEFAULT_MAX_ARCS,
            max_enum: ENUM_THRESHOLD,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PresetInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub needs_fixtures: bool,
}

pub const PRESETS: &[PresetInfo] = &[
    PresetInfo {
        name: "s7-straight-twisted-amalgam",
        summary: "amalgam (AGL(1,5)xC2, S3xC4, C4xC2) in S_7; graph on 126+210 vertices, valencies {5,3}",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "psl2-59-straight-twisted",
        summary: "C_4 twisting a C_10 in PSL(2,59); amalgam orders (40,24,8), valencies {5,3}",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "psl2-61-straight-twisted",
        summary: "C_4 twisting a C_10 in PSL(2,61); amalgam orders (40,24,8), valencies {5,3}",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "psl2-61-twisted-nondiag",
        summary: "PSL(2,61) wr C_4 on 248 points; amalgam orders (40,72,8), valencies {5,9}",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "straight-nondiag-n3",
        summary: "straight-nondiagonal family over S_5; valencies {3,9} (n4..n6 likewise)",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "straight-nondiag-n4",
        summary: "straight-nondiagonal family over S_6; valencies {4,9}",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "straight-nondiag-n5",
        summary: "straight-nondiagonal family over S_7; valencies {5,9}",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "straight-nondiag-n6",
        summary: "straight-nondiagonal family over S_8; valencies {6,9}",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "a89-twisted-twisted-amalgam",
        summary: "amalgam (C71:C70 x C9, C19:C18 x C35, C630) inside A_89; no graph (index too large)",
        needs_fixtures: true,
    },
    PresetInfo {
        name: "j2-nondiag-nondiag",
        summary: "J2 wr C_4 on 400 points from the degree-100 fixture; regular of valency 9",
        needs_fixtures: true,
    },
    PresetInfo {
        name: "psl2-16-five-arc-components",
        summary: "subgroup machinery in PSL(2,16): |L1| = 48 of shape 2^4:3 with L1 n R1 = A_4",
        needs_fixtures: false,
    },
    PresetInfo {
        name: "monster-twisted-twisted",
        summary: "metadata-only stub (amalgam part orders 142, 38, 2 with |K| = 315); refuses computation",
        needs_fixtures: false,
    },
];

/// Amalgam data of the metadata-only stub: |L1|, |R1|, |L1 n R1|, |K|.
pub const MONSTER_STUB_ORDERS: [u64; 4] = [142, 38, 2, 315];

/// The fixture directory: `ARCLAB_DATA` if set, else the crate's `data/`.
pub fn default_data_dir() -> PathBuf {
    std::env::var_os("ARCLAB_DATA")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data")))
}

#[derive(Debug)]
pub struct PresetOutcome {
    pub report: Report,
    pub graph: Option<CosetGraph>,
}

pub fn verify_preset(
    name: &str,
    data_dir: &Path,
    th: &Thresholds,
    build_graph: bool,
) -> Result<PresetOutcome> {
    match name {
        "s7-straight-twisted-amalgam" => preset_s7(th, build_graph),
        "psl2-59-straight-twisted" => preset_psl2_straight_twisted(59, th),
        "psl2-61-straight-twisted" => preset_psl2_straight_twisted(61, th),
        "psl2-61-twisted-nondiag" => preset_psl2_61_twisted_nondiag(th),
        "a89-twisted-twisted-amalgam" => preset_a89(data_dir, th),
        "j2-nondiag-nondiag" => preset_j2(data_dir, th),
        "psl2-16-five-arc-components" => preset_psl2_16(th),
        "monster-twisted-twisted" => Err(Error::OutOfScope(
            "the monster-twisted-twisted preset is a metadata-only stub (amalgam part orders \
             142, 38, 2 with |K| = 315); the ambient simple group is far beyond exact \
             permutation computation, so every check is disabled"
                .into(),
        )),
        _ => match name
            .strip_prefix("straight-nondiag-n")
            .and_then(|s| s.parse::<usize>().ok())
        {
            Some(n) if (3..=8).contains(&n) => preset_straight_nondiag(n, th),
            Some(n) => Err(Error::InvalidArgument(format!(
                "straight-nondiag-n{n} is out of the supported range 3..=8"
            ))),
            None => Err(Error::InvalidArgument(format!("unknown preset {name:?}"))),
        },
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product::<BigUint>().max(big(1))
}

fn cycles(s: &str, degree: usize) -> Result<Perm> {
    Perm::parse_cycles(s, degree)
}

/// Breadth-first scan over group elements in generator-word order; stops
/// when `visit` accepts an element.  Errors if the cap is reached first.
fn scan_elements(
    group: &PermGroup,
    cap: usize,
    what: &str,
    mut visit: impl FnMut(&Perm) -> Result<bool>,
) -> Result<Perm> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue: VecDeque<Perm> = VecDeque::new();
    let id = Perm::identity(group.degree());
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for g in group.generators() {
            let f = e.compose(g)?;
            if seen.contains(&f) {
                continue;
            }
            if visit(&f)? {
                return Ok(f);
            }
            if seen.len() >= cap {
                return Err(Error::SearchFailed(format!(
                    "no {what} found among the first {cap} group elements"
                )));
            }
            seen.insert(f.clone());
            queue.push_back(f);
        }
    }
    Err(Error::SearchFailed(format!(
        "no {what} found in the whole group"
    )))
}

/// Record the standard amalgam checks: orders, intersection, generation,
/// valencies, and the coset-action 2-transitivity criterion.
#[allow(clippy::too_many_arguments)]
fn amalgam_checks(
    report: &mut Report,
    l: &PermGroup,
    r: &PermGroup,
    expect_l: BigUint,
    expect_r: BigUint,
    expect_meet: BigUint,
    expect_join: BigUint,
    th: &Thresholds,
) -> Result<(PermGroup, PermGroup)> {
    let meet = l.intersect_small(r, th.max_enum)?;
    let join = l.join(r)?;
    report.expect("|L|", l.order(), expect_l);
    report.expect("|R|", r.order(), expect_r);
    report.expect("|L n R|", meet.order(), expect_meet);
    report.expect("|<L,R>|", join.order(), expect_join);
    let val_l = l.order() / meet.order();
    let val_r = r.order() / meet.order();
    report.insert("valencies", [val_l.to_string(), val_r.to_string()]);
    let two_at = is_locally_2at_amalgam(l, r, &meet)?;
    report.push(
        "locally 2-arc-transitive (amalgam criterion)",
        two_at,
        format!("coset actions on {val_l} and {val_r} points are 2-transitive"),
    );
    Ok((meet, join))
}

/// Build and check the coset graph when the vertex count permits.
fn try_graph(
    report: &mut Report,
    g: &PermGroup,
    l: &PermGroup,
    r: &PermGroup,
    th: &Thresholds,
) -> Result<Option<CosetGraph>> {
    let index = g.order() / l.order() + g.order() / r.order();
    if index > big(th.max_index as u64) {
        report.insert(
            "graph",
            format!("skipped: {index} vertices exceed the index bound {}", th.max_index),
        );
        return Ok(None);
    }
    let cg = build_coset_graph_bounded(g, l, r, th.max_index)?;
    report.push(
        "graph connected",
        cg.is_connected()?,
        format!(
            "{} + {} vertices, {} edges",
            cg.left_count(),
            cg.right_count(),
            cg.graph.edge_count()
        ),
    );
    report.insert("vertices_left", cg.left_count());
    report.insert("vertices_right", cg.right_count());
    report.insert("edges", cg.graph.edge_count());
    let direct = is_locally_s_arc_transitive_bounded(&cg, 2, th.max_arcs)?;
    report.push(
        "locally 2-arc-transitive (direct on graph)",
        direct.verdict,
        format!(
            "arc orbits at the two representatives: {:?}",
            direct
                .per_orbit
                .iter()
                .map(|o| o.orbit_count)
                .collect::<Vec<_>>()
        ),
    );
    Ok(Some(cg))
}

// ---------------------------------------------------------------------------
// S_7
// ---------------------------------------------------------------------------

/// The printed generators for L check out; the printed generators for R
/// generate a group of order 6 rather than 24, so R is recovered by a
/// deterministic search: the S_3 part on {1,2,5} is kept and the C_4
/// part is the first order-4 element of L fixing 1, 2 and 5 that makes
/// every amalgam condition hold.
fn preset_s7(th: &Thresholds, build_graph: bool) -> Result<PresetOutcome> {
    let mut report = Report::new("s7-straight-twisted-amalgam");
    let s7 = make_standard(StandardKind::Symmetric, 7)?;
    let l = PermGroup::new(
        7,
        vec![
            cycles("(4,5,6,7)", 7)?,
            cycles("(3,4,5,7,6)", 7)?,
            cycles("(1,2)", 7)?,
        ],
    )?;
    report.expect("|L|", l.order(), big(40));
    let p12 = cycles("(1,2)", 7)?;
    let p25 = cycles("(2,5)", 7)?;
    let mut found: Option<PermGroup> = None;
    for c in l.elements(th.max_enum)? {
        // fixed points 1, 2, 5 are 0-based 0, 1, 4
        if c.order() != 4 || c.apply(0) != 0 || c.apply(1) != 1 || c.apply(4) != 4 {
            continue;
        }
        let r = PermGroup::new(7, vec![p12.clone(), p25.clone(), c])?;
        if r.order() != big(24) {
            continue;
        }
        let meet = l.intersect_small(&r, th.max_enum)?;
        if meet.order() != big(8) || l.join(&r)?.order() != s7.order() {
            continue;
        }
        if is_locally_2at_amalgam(&l, &r, &meet)? {
            found = Some(r);
            break;
        }
    }
    let r = found.ok_or_else(|| {
        Error::SearchFailed("no order-4 completion of the S_3 part yields the amalgam".into())
    })?;
    report.insert(
        "r_generators",
        r.generators()
            .iter()
            .map(Perm::cycle_string)
            .collect::<Vec<_>>(),
    );
    let (_, join) = amalgam_checks(
        &mut report,
        &l,
        &r,
        big(40),
        big(24),
        big(8),
        big(5040),
        th,
    )?;
    let graph = if build_graph {
        let cg = try_graph(&mut report, &join, &l, &r, th)?;
        if let Some(cg) = &cg {
            report.expect("left vertex count", cg.left_count(), 126);
            report.expect("right vertex count", cg.right_count(), 210);
            report.expect("edge count", cg.graph.edge_count(), 630);
            report.expect("left valency", cg.left_valency(), 5);
            report.expect("right valency", cg.right_valency(), 3);
        }
        cg
    } else {
        None
    };
    Ok(PresetOutcome { report, graph })
}

// ---------------------------------------------------------------------------
// PSL(2,p) with a twisted C_10 side (builder with constant right side)
// ---------------------------------------------------------------------------

/// Find a C_10 subgroup L1 = <h>, its involution x = h^5, and an S_3
/// subgroup R1 = <r, x> with r of order 3 inverted by x, such that L1
/// and R1 intersect in <x> and generate the whole group.
fn c10_s3_amalgam_parts(t: &PermGroup) -> Result<(Perm, PermGroup, PermGroup)> {
    let mut h10: Option<Perm> = None;
    scan_elements(t, 100_000, "element of order divisible by 10", |e| {
        let o = e.order();
        if o % 10 == 0 {
            h10 = Some(e.pow(o / 10));
            return Ok(true);
        }
        Ok(false)
    })?;
    let h10 = h10.expect("scan succeeded");
    let l1 = PermGroup::new(t.degree(), vec![h10.clone()])?;
    let x = h10.pow(5);
    let mut r1: Option<PermGroup> = None;
    scan_elements(t, 100_000, "order-3 partner inverted by x", |e| {
        let o = e.order();
        if o % 3 != 0 {
            return Ok(false);
        }
        let u = e.pow(o / 3);
        if u.conjugate(&x) != u.inverse() {
            return Ok(false);
        }
        let cand = PermGroup::new(t.degree(), vec![u, x.clone()])?;
        if cand.order() != big(6)
            || l1.intersect_small(&cand, ENUM_THRESHOLD)?.order() != big(2)
            || l1.join(&cand)?.order() != t.order()
        {
            return Ok(false);
        }
        r1 = Some(cand);
        Ok(true)
    })?;
    Ok((h10, l1, r1.expect("scan succeeded")))
}

fn preset_psl2_straight_twisted(p: usize, th: &Thresholds) -> Result<PresetOutcome> {
    let mut report = Report::new(format!("psl2-{p}-straight-twisted"));
    let t = make_psl2(p)?;
    let t_order = big((p * (p * p - 1) / 2) as u64);
    report.expect("|T|", t.order(), t_order.clone());
    let (h10, l1, r1) = c10_s3_amalgam_parts(&t)?;
    report.expect("|L1|", l1.order(), big(10));
    report.expect("|R1|", r1.order(), big(6));

    // K = C_4 acting on L1 = C_10 by t -> t^3 (an order-4 automorphism
    // fixing the involution h^5 shared with R1).
    let k = PermGroup::new(4, vec![cycles("(1,2,3,4)", 4)?])?;
    let out = construct_3_1(&t, &l1, &r1, &k, &[vec![h10.pow(3)]])?;
    construction_amalgam_checks(&mut report, &out, big(40), big(24), big(8), th)?;
    k_normalization_checks(&mut report, &out)?;

    let pa = pa_report(&out.product, &out.g_alpha, &out.n_alpha, &out.n, None)?;
    report.expect("socle exponent j (|N| = |T|^j)", pa.socle_exponent, 2);
    report.push(
        "top factor group transitive on coordinates",
        pa.factor_transitive,
        format!("factor order {}", pa.factor_order),
    );
    report.insert("pa_report", &pa);
    Ok(PresetOutcome { report, graph: None })
}

fn construction_amalgam_checks(
    report: &mut Report,
    out: &ConstructionOutput,
    expect_a: BigUint,
    expect_b: BigUint,
    expect_ab: BigUint,
    _th: &Thresholds,
) -> Result<()> {
    report.expect("|G_alpha|", out.g_alpha.order(), expect_a);
    report.expect("|G_beta|", out.g_beta.order(), expect_b);
    report.expect("|G_alpha n G_beta|", out.g_alpha_beta.order(), expect_ab);
    let val_l = out.g_alpha.order() / out.g_alpha_beta.order();
    let val_r = out.g_beta.order() / out.g_alpha_beta.order();
    report.insert("valencies", [val_l.to_string(), val_r.to_string()]);
    report.push(
        "locally 2-arc-transitive (amalgam criterion)",
        out.local_2at()?,
        format!("coset actions on {val_l} and {val_r} points are 2-transitive"),
    );
    Ok(())
}

fn k_normalization_checks(report: &mut Report, out: &ConstructionOutput) -> Result<()> {
    let mut ok = true;
    for t in &out.top_gens {
        for g in out.n_alpha.generators() {
            ok &= out.n_alpha.contains(&g.conjugate(t))?;
        }
        for g in out.n_beta.generators() {
            ok &= out.n_beta.contains(&g.conjugate(t))?;
        }
    }
    report.push(
        "top part normalizes N_alpha and N_beta",
        ok,
        "generator-wise conjugation test",
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// PSL(2,61) twisted-nondiagonal on 248 points
// ---------------------------------------------------------------------------

/// The subgroup data is derived arithmetically rather than searched:
/// with g a primitive root mod 61 and h : z -> g^2 z the order-30 torus
/// element, take l = h^6 (order 5), x = h^15 (z -> -z), and conjugate
/// h^10 by the order-3 Moebius map z -> (iz - 1)/(iz + 1) with i^2 = -1,
/// which normalizes the four-group <z -> -z, z -> -1/z> without
/// centralizing it.  Every property is then verified by computation.
fn preset_psl2_61_twisted_nondiag(th: &Thresholds) -> Result<PresetOutcome> {
    let mut report = Report::new("psl2-61-twisted-nondiag");
    let p = 61usize;
    let t = make_psl2(p)?;
    report.expect("|T|", t.order(), big(113460));
    let f = FiniteField::new(p)?;
    let g = f.multiplicative_generator();
    let h = mobius_perm(&f, f.mul(g, g), 0, 0, 1)?;
    report.expect("torus element order", h.order(), 30);
    let l = h.pow(6);
    let x = h.pow(15);
    let i = (2..p)
        .find(|&i| f.mul(i, i) == f.neg(1))
        .ok_or_else(|| Error::SearchFailed("no square root of -1 mod 61".into()))?;
    let g3 = mobius_perm(&f, i, f.neg(1), i, 1)?;
    report.expect("normalizing element order", g3.order(), 3);
    let w = mobius_perm(&f, 0, f.neg(1), 1, 0)?;
    let xw = x.compose(&w)?;
    let four_group = [x.clone(), w.clone(), xw.clone()];
    let cycles_involutions = four_group
        .iter()
        .all(|u| four_group.contains(&u.conjugate(&g3)))
        && x.conjugate(&g3) != x;
    report.push(
        "order-3 element cycles the three involutions of the four-group",
        cycles_involutions,
        "conjugation by g3 permutes {x, w, xw} without fixed points",
    );
    let r = h.pow(10).conjugate(&g3);
    report.expect("r order", r.order(), 3);
    report.push(
        "x inverts r",
        r.conjugate(&x) == r.inverse(),
        "r^x = r^-1",
    );
    let l1 = PermGroup::new(t.degree(), vec![l.clone(), x.clone()])?;
    let r1 = PermGroup::new(t.degree(), vec![r.clone(), x.clone()])?;
    report.expect("|L|", l1.order(), big(10));
    report.expect("|R|", r1.order(), big(6));
    report.expect(
        "|L n R|",
        l1.intersect_small(&r1, th.max_enum)?.order(),
        big(2),
    );
    report.expect("|<L,R>|", l1.join(&r1)?.order(), t.order());

    // The wreath data, patterned on the equidistant ternary code.
    let frame = WreathFrame::new(t.degree(), 4)?;
    let degree = frame.degree();
    let id = Perm::identity(t.degree());
    let bar = |e: &Perm| frame.base_element(&[e.clone(), e.pow(2), e.pow(4), e.pow(3)]);
    let lbar = bar(&l)?;
    let xbar = frame.diagonal(&x)?;
    let n_alpha = PermGroup::new(degree, vec![lbar.clone(), xbar.clone()])?;
    let n_beta = PermGroup::new(
        degree,
        vec![
            frame.base_element(&[r.clone(), r.clone(), r.clone(), id.clone()])?,
            frame.base_element(&[r.clone(), r.inverse(), id.clone(), r.clone()])?,
            xbar.clone(),
        ],
    )?;
    let tau = frame.element(
        &[x.clone(), id.clone(), x.clone(), x.clone()],
        &cycles("(1,2,3,4)", 4)?,
    )?;
    report.expect("tau order", tau.order(), 8);
    report.push(
        "tau twists the diagonal generator",
        lbar.conjugate(&tau) == bar(&l.pow(3))?,
        "conjugation by tau maps the twisted tuple of l to that of l^3",
    );
    let g_alpha = PermGroup::new(degree, vec![lbar, xbar, tau.clone()])?;
    let g_beta = PermGroup::new(
        degree,
        [n_beta.generators().to_vec(), vec![tau.clone()]].concat(),
    )?;
    let g_full = g_alpha.join(&g_beta)?;
    let meet = g_alpha.intersect_small(&g_beta, th.max_enum)?;
    report.expect("|G_alpha|", g_alpha.order(), big(40));
    report.expect("|G_beta|", g_beta.order(), big(72));
    report.expect("|G_alpha n G_beta|", meet.order(), big(8));
    report.insert("valencies", ["5", "9"]);
    let n = n_alpha.join(&n_beta)?;
    report.expect("|N|", n.order(), big(113460).pow(4));

    let on_alpha = coset_action(&g_alpha, &meet)?;
    report.expect("G_alpha coset-action degree", on_alpha.index(), 5);
    report.push(
        "G_alpha 2-transitive on its 5 cosets",
        on_alpha.action.is_k_transitive(2)?,
        format!("action order {}", on_alpha.action.order()),
    );
    let on_beta = coset_action(&g_beta, &meet)?;
    report.expect("G_beta coset-action degree", on_beta.index(), 9);
    report.push(
        "G_beta sharply 2-transitive on its 9 cosets",
        on_beta.action.is_sharply_k_transitive(2)?,
        format!("action order {}", on_beta.action.order()),
    );
    report.push(
        "locally 2-arc-transitive (amalgam criterion)",
        is_locally_2at_amalgam(&g_alpha, &g_beta, &meet)?,
        "both coset actions 2-transitive",
    );

    let pg = ProductGroup::new(frame, g_full)?;
    let ca = classify_diagonal(&pg, &n_alpha)?;
    report.push(
        "N_alpha twisted diagonal",
        ca.verdict == DiagonalVerdict::Twisted,
        format!("{:?}", ca.verdict),
    );
    let cb = classify_diagonal(&pg, &n_beta)?;
    report.push(
        "N_beta nondiagonal",
        cb.verdict == DiagonalVerdict::Nondiagonal,
        format!("{:?}", cb.verdict),
    );
    let pa = pa_report(&pg, &g_alpha, &n_alpha, &n, None)?;
    report.expect("socle exponent j (|N| = |T|^j)", pa.socle_exponent, 4);
    report.push(
        "top factor group transitive on coordinates",
        pa.factor_transitive,
        format!("factor order {}", pa.factor_order),
    );
    report.push(
        "block-witness chain strict (action not primitive)",
        pa.witness_chain.strict,
        format!(
            "{} < {} < {}",
            pa.witness_chain.stabilizer_order,
            pa.witness_chain.block_stabilizer_order,
            pa.witness_chain.group_order
        ),
    );
    report.insert("pa_report", &pa);
    Ok(PresetOutcome { report, graph: None })
}

// ---------------------------------------------------------------------------
// Straight-nondiagonal family
// ---------------------------------------------------------------------------

fn preset_straight_nondiag(n: usize, th: &Thresholds) -> Result<PresetOutcome> {
    let mut report = Report::new(format!("straight-nondiag-n{n}"));
    let out = construct_straight_nondiagonal(n)?;
    let eight = big(8);
    construction_amalgam_checks(
        &mut report,
        &out,
        &eight * factorial(n),
        big(72) * factorial(n - 1),
        &eight * factorial(n - 1),
        th,
    )?;
    report.expect(
        "left valency",
        out.g_alpha.order() / out.g_alpha_beta.order(),
        big(n as u64),
    );
    report.expect(
        "right valency",
        out.g_beta.order() / out.g_alpha_beta.order(),
        big(9),
    );
    let on_beta = coset_action(&out.g_beta, &out.g_alpha_beta)?;
    report.push(
        "G_beta sharply 2-transitive on its 9 cosets",
        on_beta.action.is_sharply_k_transitive(2)?,
        format!("action order {}", on_beta.action.order()),
    );
    let ca = classify_diagonal(&out.product, &out.n_alpha)?;
    report.push(
        "N_alpha straight diagonal",
        ca.verdict == DiagonalVerdict::Straight,
        format!("{:?}", ca.verdict),
    );
    let cb = classify_diagonal(&out.product, &out.n_beta)?;
    report.push(
        "N_beta nondiagonal",
        cb.verdict == DiagonalVerdict::Nondiagonal,
        format!("{:?}", cb.verdict),
    );
    let a4 = (factorial(n + 2) / big(2)).pow(4);
    report.push(
        "|N| divisible by |Alt(n+2)|^4",
        (&out.n.order() % &a4).is_zero(),
        format!("|N| = {}", out.n.order()),
    );
    Ok(PresetOutcome { report, graph: None })
}

// ---------------------------------------------------------------------------
// A_89 amalgam (fixture-backed)
// ---------------------------------------------------------------------------

fn preset_a89(data_dir: &Path, th: &Thresholds) -> Result<PresetOutcome> {
    let mut report = Report::new("a89-twisted-twisted-amalgam");
    let l = load_generators(data_dir.join("a89_l.gens"))?;
    let r = load_generators(data_dir.join("a89_r.gens"))?;
    if l.degree() != 89 || r.degree() != 89 {
        return Err(Error::InvalidArgument(
            "the fixtures must act on 89 points".into(),
        ));
    }
    let a89_order = factorial(89) / big(2);
    let (meet, join) = amalgam_checks(
        &mut report,
        &l,
        &r,
        big(44730),
        big(11970),
        big(630),
        a89_order,
        th,
    )?;
    report.expect(
        "left coset-action degree",
        l.order() / meet.order(),
        big(71),
    );
    report.expect(
        "right coset-action degree",
        r.order() / meet.order(),
        big(19),
    );
    // The graph would have ~10^130 vertices: record the skip explicitly.
    let _ = try_graph(&mut report, &join, &l, &r, th)?;
    Ok(PresetOutcome { report, graph: None })
}

// ---------------------------------------------------------------------------
// J2 nondiagonal-nondiagonal (fixture-backed)
// ---------------------------------------------------------------------------

fn preset_j2(data_dir: &Path, th: &Thresholds) -> Result<PresetOutcome> {
    let mut report = Report::new("j2-nondiag-nondiag");
    let t = load_generators(data_dir.join("j2_t.gens"))?;
    let l_grp = load_generators(data_dir.join("j2_l.gens"))?;
    let r_grp = load_generators(data_dir.join("j2_r.gens"))?;
    report.expect("|T|", t.order(), big(604800));
    report.push(
        "witness subgroups lie in T",
        l_grp.is_subgroup_of(&t)? && r_grp.is_subgroup_of(&t)?,
        "membership via the stabilizer chain",
    );
    let [l, xl] = l_grp.generators() else {
        return Err(Error::InvalidArgument(
            "the L fixture must list exactly an order-3 element and an involution".into(),
        ));
    };
    let [r, xr] = r_grp.generators() else {
        return Err(Error::InvalidArgument(
            "the R fixture must list exactly an order-3 element and an involution".into(),
        ));
    };
    if xl != xr {
        return Err(Error::InvalidArgument(
            "the two witness fixtures must share their involution".into(),
        ));
    }
    let x = xl.clone();
    report.expect("l order", l.order(), 3);
    report.expect("r order", r.order(), 3);
    report.expect("shared involution order", x.order(), 2);
    report.expect("|L|", l_grp.order(), big(6));
    report.expect("|R|", r_grp.order(), big(6));
    report.expect(
        "|L n R|",
        l_grp.intersect_small(&r_grp, th.max_enum)?.order(),
        big(2),
    );
    report.expect("|<L,R>|", l_grp.join(&r_grp)?.order(), t.order());
    report.expect(
        "centralizer order of l (first class of order-3 elements)",
        t.centralizer_order(l, 20_000)?,
        big(1080),
    );
    report.expect(
        "centralizer order of r (second class of order-3 elements)",
        t.centralizer_order(r, 20_000)?,
        big(36),
    );

    let frame = WreathFrame::new(t.degree(), 4)?;
    let degree = frame.degree();
    let id = Perm::identity(t.degree());
    let code_pattern = |e: &Perm| -> Result<Vec<Perm>> {
        Ok(vec![
            frame.base_element(&[e.clone(), e.clone(), e.clone(), id.clone()])?,
            frame.base_element(&[e.clone(), e.inverse(), id.clone(), e.clone()])?,
            frame.diagonal(&x)?,
        ])
    };
    let n_alpha = PermGroup::new(degree, code_pattern(l)?)?;
    let n_beta = PermGroup::new(degree, code_pattern(r)?)?;
    let tau = frame.element(
        &[x.clone(), id.clone(), x.clone(), x.clone()],
        &cycles("(1,2,3,4)", 4)?,
    )?;
    report.expect("tau order", tau.order(), 8);
    let g_alpha = PermGroup::new(
        degree,
        [n_alpha.generators().to_vec(), vec![tau.clone()]].concat(),
    )?;
    let g_beta = PermGroup::new(
        degree,
        [n_beta.generators().to_vec(), vec![tau.clone()]].concat(),
    )?;
    let meet = g_alpha.intersect_small(&g_beta, th.max_enum)?;
    report.expect("|G_alpha|", g_alpha.order(), big(72));
    report.expect("|G_beta|", g_beta.order(), big(72));
    report.expect("|G_alpha n G_beta|", meet.order(), big(8));
    report.insert("valencies", ["9", "9"]);
    report.push(
        "locally 2-arc-transitive (amalgam criterion)",
        is_locally_2at_amalgam(&g_alpha, &g_beta, &meet)?,
        "both coset actions on 9 points are 2-transitive",
    );
    let n = n_alpha.join(&n_beta)?;
    report.expect("|N|", n.order(), big(604800).pow(4));
    let g_full = g_alpha.join(&g_beta)?;
    let pg = ProductGroup::new(frame, g_full)?;
    for (name, sub) in [("N_alpha", &n_alpha), ("N_beta", &n_beta)] {
        let c = classify_diagonal(&pg, sub)?;
        report.push(
            format!("{name} nondiagonal"),
            c.verdict == DiagonalVerdict::Nondiagonal,
            format!("{:?}", c.verdict),
        );
    }
    Ok(PresetOutcome { report, graph: None })
}

// ---------------------------------------------------------------------------
// PSL(2,16) subgroup machinery
// ---------------------------------------------------------------------------

fn preset_psl2_16(th: &Thresholds) -> Result<PresetOutcome> {
    let mut report = Report::new("psl2-16-five-arc-components");
    let t = make_psl2(16)?;
    report.expect("|T|", t.order(), big(4080));
    let borel = borel_subgroup(16)?;
    report.expect("Borel subgroup order", borel.group.order(), big(240));
    let y1 = borel.torus_gen.clone();
    report.expect("torus generator order", y1.order(), 15);
    let r1 = subfield_psl2(16, 2)?;
    report.expect("subfield subgroup order", r1.order(), big(60));
    let y0 = r1.intersect_small(&borel.group, th.max_enum)?;
    report.expect("|Y0| (subfield Borel)", y0.order(), big(12));
    report.push(
        "Y0 contains the order-3 torus part",
        y0.contains(&y1.pow(5))?,
        "y1^5 lies in the subfield subgroup",
    );
    let y0c = y0.conjugate_by(&y1)?;
    let same = y0c.is_subgroup_of(&y0)?;
    report.push(
        "Y0 and its conjugate by y1 differ",
        !same,
        "otherwise y1 would normalize Y0",
    );
    let l1 = y0.join(&y0c)?;
    report.expect("|L1|", l1.order(), big(48));

    // Structure signature 2^4 : 3: the involutions of L1 together with
    // the identity form a normal elementary-abelian subgroup of order 16.
    let elements = l1.elements(th.max_enum)?;
    let invols: Vec<Perm> = elements.iter().filter(|e| e.order() == 2).cloned().collect();
    report.expect("involution count in L1", invols.len(), 15);
    let u = PermGroup::new(t.degree(), invols)?;
    report.expect("|U| (2-part)", u.order(), big(16));
    let mut normal = true;
    for g in l1.generators() {
        for s in u.generators() {
            normal &= u.contains(&s.conjugate(g))?;
        }
    }
    report.push("U normal in L1", normal, "index 3 complement");
    let meet = l1.intersect_small(&r1, th.max_enum)?;
    report.expect("|L1 n R1|", meet.order(), big(12));
    report.push(
        "L1 n R1 equals Y0",
        meet.order() == y0.order() && y0.is_subgroup_of(&l1)?,
        "Y0 lies in both and matches the intersection order",
    );
    report.expect("|<L1,R1>|", l1.join(&r1)?.order(), big(4080));
    report.push(
        "subfield avoidance",
        !y0c.is_subgroup_of(&r1)?,
        "the y1-conjugate of Y0 escapes the subfield subgroup",
    );
    Ok(PresetOutcome { report, graph: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_and_unknown_names() {
        assert_eq!(PRESETS.len(), 12);
        let th = Thresholds::default();
        let dir = default_data_dir();
        assert!(matches!(
            verify_preset("nope", &dir, &th, false),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            verify_preset("monster-twisted-twisted", &dir, &th, false),
            Err(Error::OutOfScope(_))
        ));
        assert!(matches!(
            verify_preset("straight-nondiag-n2", &dir, &th, false),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn s7_preset_with_graph() {
        let th = Thresholds::default();
        let out = preset_s7(&th, true).unwrap();
        assert!(out.report.verdict(), "{}", out.report.render_text());
        assert_eq!(out.graph.unwrap().graph.edge_count(), 630);
    }

    #[test]
    fn psl2_16_preset() {
        let th = Thresholds::default();
        let out = preset_psl2_16(&th).unwrap();
        assert!(out.report.verdict(), "{}", out.report.render_text());
    }
}
