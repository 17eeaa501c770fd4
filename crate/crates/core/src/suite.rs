//! Property suite run by `finred check`: every invariant of the library,
//! checked on every stream of a canonical family.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    chain_to_colist, complement_until_red, first_red_truncate, pad_double, red_positions,
    search_tag, RedPositions,
};
use crate::family::canonical_family;
use crate::fixpoint::{gfp_traced, lfp_traced, Quotient, StateSet, StateSpace};
use crate::notions::{
    almost_full_blues, bounded_size, classify, noetherian_rank, reds_enumerate, streamless, DecSet,
};
use crate::stream::{f2s_up, parse_stream, s2f, Color, Position, UpStream};
use crate::succession::{AccResult, SuccRelation};
use crate::temporal::{
    self, check_black_box, decide, minimal_bound, PredicateId, Verdict3,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub max_prefix: usize,
    pub max_cycle: usize,
    pub max_n: usize,
    pub fuel: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_prefix: 5,
            max_cycle: 4,
            max_n: 8,
            fuel: 1000,
        }
    }
}

type Check = fn(&UpStream, &Ctx) -> Result<(), String>;

struct Ctx<'a> {
    config: &'a SuiteConfig,
    /// Streams compared pairwise against the current one.
    neighbours: &'a [UpStream],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// Up to three failing streams with a diagnostic each.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub config: SuiteConfig,
    pub streams: usize,
    pub properties: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0)
    }
}

type Operator<'a> = Box<dyn Fn(&StateSet) -> StateSet + 'a>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Positions worth probing on `s`: the prefix and two full cycle passes.
fn horizon(s: &UpStream) -> Position {
    s.prefix_len() + 2 * s.cycle_len()
}

const PROPERTIES: &[(&str, Check)] = &[
    ("stream.suffix_shift", suffix_shift),
    ("stream.round_trip", round_trip),
    ("stream.canonical_form", canonical_form),
    ("stream.bisimilarity_oracle", bisimilarity_oracle),
    ("stream.suffix_stabilizes", suffix_stabilizes),
    ("fixpoint.kleene", kleene),
    ("temporal.g_blue_oracle", g_blue_oracle),
    ("temporal.fg_blue_oracle", fg_blue_oracle),
    ("temporal.nu_u_is_gf_red", nu_u_is_gf_red),
    ("temporal.lpo_on_fragment", lpo_on_fragment),
    ("temporal.f_iter_is_atmost", f_iter_is_atmost),
    ("temporal.downward_chain", downward_chain),
    ("temporal.black_box_soundness", black_box_soundness),
    ("succession.determinism", determinism),
    ("succession.acc_is_mu_w", acc_is_mu_w),
    ("succession.sn_is_streamless", sn_is_streamless),
    ("succession.af_is_nu_u", af_is_nu_u),
    ("succession.rank_law", rank_law),
    ("succession.on_characterization", on_characterization),
    ("succession.pop_characterization", pop_characterization),
    ("succession.acc_trans", acc_trans),
    ("notions.collapse", collapse),
    ("notions.atmost_is_bounded_size", atmost_is_bounded_size),
    ("notions.noetherian_brute_force", noetherian_brute_force),
    ("notions.enumerated_is_fg_blue", enumerated_is_fg_blue),
    ("notions.streamless_is_almost_full", streamless_is_almost_full),
    ("notions.witness_consistency", witness_consistency),
    ("constructions.first_red_truncate", law_first_red_truncate),
    ("constructions.complement_until_red", law_complement_until_red),
    ("constructions.pad_double", law_pad_double),
    ("constructions.search_tag", law_search_tag),
    ("constructions.red_positions", law_red_positions),
    ("constructions.chain_to_colist", law_chain_to_colist),
    ("cli.literal_round_trip", literal_round_trip),
];

pub fn property_names() -> impl Iterator<Item = &'static str> {
    PROPERTIES.iter().map(|(name, _)| *name)
}

pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let family = canonical_family(config.max_prefix, config.max_cycle);
    let per_stream: Vec<Vec<Result<(), String>>> = family
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let end = (i + 4).min(family.len());
            let ctx = Ctx {
                config,
                neighbours: &family[i + 1..end],
            };
            PROPERTIES.iter().map(|(_, check)| check(s, &ctx)).collect()
        })
        .collect();

    let properties = PROPERTIES
        .iter()
        .enumerate()
        .map(|(k, (name, _))| {
            let mut outcome = PropertyOutcome {
                name,
                passed: 0,
                failed: 0,
                failures: Vec::new(),
            };
            for (s, results) in family.iter().zip(&per_stream) {
                match &results[k] {
                    Ok(()) => outcome.passed += 1,
                    Err(msg) => {
                        outcome.failed += 1;
                        if outcome.failures.len() < 3 {
                            outcome.failures.push(format!("{s}: {msg}"));
                        }
                    }
                }
            }
            outcome
        })
        .collect();

    SuiteReport {
        schema: crate::notions::SCHEMA_VERSION,
        config: *config,
        streams: family.len(),
        properties,
    }
}

fn suffix_shift(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let h = horizon(s) + 2;
    for n in 0..h {
        let t = s.suffix(n);
        ensure(t.is_canonical(), || format!("suffix at {n} is not canonical"))?;
        for k in 0..h {
            ensure(t.at(k) == s.at(n + k), || format!("suffix {n} differs at {k}"))?;
        }
    }
    Ok(())
}

fn round_trip(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let f = s2f(s);
    let (p, c) = (s.prefix_len(), s.cycle_len());
    for (pl, cl) in [(p, c), (p + 1, c), (p, 2 * c), (p + 3, 3 * c)] {
        let back = f2s_up(&f, pl, cl).map_err(|e| format!("shape ({pl},{cl}): {e}"))?;
        ensure(back.bisimilar(s), || format!("shape ({pl},{cl}) gave {back}"))?;
    }
    Ok(())
}

fn canonical_form(s: &UpStream, _: &Ctx) -> Result<(), String> {
    ensure(s.canonicalize() == *s, || "canonicalize not idempotent".into())?;
    let mut unrolled = s.prefix().to_vec();
    unrolled.extend_from_slice(s.cycle());
    let mut rotated = s.cycle().to_vec();
    rotated.rotate_left(1);
    let variants = [
        UpStream::new(unrolled.clone(), s.cycle().to_vec()),
        UpStream::new(s.prefix().to_vec(), s.cycle().repeat(2)),
        UpStream::new([unrolled, vec![s.cycle()[0]]].concat(), rotated),
    ];
    for v in variants {
        let v = v.map_err(|e| e.to_string())?;
        ensure(v.canonicalize() == *s, || format!("{v} canonicalizes elsewhere"))?;
    }
    Ok(())
}

fn bisimilarity_oracle(s: &UpStream, ctx: &Ctx) -> Result<(), String> {
    ensure(s.bisimilar(s), || "not reflexive".into())?;
    for t in ctx.neighbours {
        let window = s.prefix_len()
            + t.prefix_len()
            + crate::stream::lcm(s.cycle_len(), t.cycle_len());
        let pointwise = (0..window).all(|n| s.at(n) == t.at(n));
        ensure(s.bisimilar(t) == pointwise, || format!("disagrees with oracle on {t}"))?;
        ensure(s.bisimilar(t) == t.bisimilar(s), || format!("not symmetric with {t}"))?;
    }
    Ok(())
}

fn suffix_stabilizes(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let (p, c) = (s.prefix_len(), s.cycle_len());
    for n in p..p + 2 * c {
        ensure(s.suffix(n).bisimilar(&s.suffix(n + c)), || format!("at {n}"))?;
    }
    Ok(())
}

fn kleene(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let q = Quotient::new(s);
    for n in 0..horizon(s) + 3 {
        ensure(q.color_of(q.state_of_position(n)) == s.at(n), || format!("quotient color at {n}"))?;
    }
    let red = q.with_color(Color::Red);
    let blue = q.with_color(Color::Blue);
    let g_blue = temporal::g_blue(&q);
    let ops: Vec<(&str, Operator<'_>)> = vec![
        ("F", Box::new(|y: &StateSet| red.union(&q.preimage(y)))),
        ("G", Box::new(|y: &StateSet| blue.intersection(&q.preimage(y)))),
        (
            "until",
            Box::new(|y: &StateSet| {
                blue.intersection(&q.preimage(y))
                    .union(&red.intersection(&q.preimage(&g_blue)))
            }),
        ),
        ("mu", Box::new(|x: &StateSet| temporal::on(&q, x))),
        ("nu", Box::new(|x: &StateSet| temporal::pop(&q, x))),
    ];
    for (name, op) in &ops {
        let least = lfp_traced(&q, op).map_err(|e| format!("{name}: {e}"))?;
        let greatest = gfp_traced(&q, op).map_err(|e| format!("{name}: {e}"))?;
        ensure(least.set.is_subset(&greatest.set), || format!("{name}: lfp ⊄ gfp"))?;
        ensure(op(&least.set) == least.set, || format!("{name}: lfp not fixed"))?;
        ensure(op(&greatest.set) == greatest.set, || format!("{name}: gfp not fixed"))?;
        ensure(
            least.iterations <= q.state_count() && greatest.iterations <= q.state_count(),
            || format!("{name}: Kleene bound exceeded"),
        )?;
    }
    Ok(())
}

fn g_blue_oracle(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let scan = s.prefix().iter().chain(s.cycle()).all(|c| c.is_blue());
    ensure(decide(&PredicateId::GBlue, s) == scan, || "G blue".into())
}

fn fg_blue_oracle(s: &UpStream, _: &Ctx) -> Result<(), String> {
    ensure(decide(&PredicateId::FGBlue, s) == s.cycle_all_blue(), || "F G blue".into())
}

fn nu_u_is_gf_red(s: &UpStream, _: &Ctx) -> Result<(), String> {
    ensure(
        decide(&PredicateId::NuU, s) == decide(&PredicateId::GFRed, s),
        || "νU ≠ G F red".into(),
    )
}

fn lpo_on_fragment(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let g = decide(&PredicateId::GBlue, s);
    let f = decide(&PredicateId::FRed, s);
    ensure(g != f, || format!("G blue = {g}, F red = {f}"))
}

fn f_iter_is_atmost(s: &UpStream, ctx: &Ctx) -> Result<(), String> {
    let q = Quotient::new(s);
    for n in 0..=ctx.config.max_n {
        let fi = temporal::f_iter(&q, n).contains(0);
        let am = temporal::at_most(&q, n).contains(0);
        let count = s.red_count().is_some_and(|r| r < n);
        ensure(fi == am && am == count, || format!("n = {n}: F^n {fi}, atmost {am}, count {count}"))?;
    }
    Ok(())
}

fn downward_chain(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let fg = decide(&PredicateId::FGBlue, s);
    let bounded = minimal_bound(s).is_some();
    let mu_w = decide(&PredicateId::MuW, s);
    let c = classify(s);
    let sn = c.streamless_reds.holds;
    let nn = c.not_not_fg_blue.holds;
    let not_gf = !decide(&PredicateId::GFRed, s);
    ensure(!fg || bounded, || "FG ⇏ bounded".into())?;
    ensure(!bounded || mu_w, || "bounded ⇏ μW".into())?;
    ensure(!mu_w || (sn && nn), || "μW ⇏ streamless ∧ ¬¬FG".into())?;
    ensure(!sn || not_gf, || "streamless ⇏ ¬GF red".into())?;
    ensure(!nn || not_gf, || "¬¬FG ⇏ ¬GF red".into())
}

fn black_box_soundness(s: &UpStream, ctx: &Ctx) -> Result<(), String> {
    let f = s2f(s);
    for fuel in [1, 4, 64, ctx.config.fuel] {
        for p in [PredicateId::FRed, PredicateId::GBlue] {
            let exact = decide(&p, s);
            let verdict = check_black_box(&p, &f, fuel).map_err(|e| e.to_string())?;
            let sound = match verdict {
                Verdict3::Holds => exact,
                Verdict3::Fails => !exact,
                Verdict3::Unknown { fuel_spent } => fuel_spent == fuel,
            };
            ensure(sound, || format!("{p} with fuel {fuel}: {verdict:?} vs {exact}"))?;
        }
    }
    Ok(())
}

fn determinism(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let rel = SuccRelation::new(s);
    for n in 0..horizon(s) + 2 {
        if let Some(m) = rel.successor(n) {
            ensure(m > n, || format!("{n} ≻ {m} is not increasing"))?;
            let l = m - 1;
            ensure(s.at(l).is_red() && (n..l).all(|k| s.at(k).is_blue()), || {
                format!("{n} ≻ {m} does not skip to one past the first red")
            })?;
        } else {
            ensure((n..horizon(s) + n).all(|k| s.at(k).is_blue()), || format!("{n} terminal with red ahead"))?;
        }
    }
    Ok(())
}

fn acc_is_mu_w(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let q = Quotient::new(s);
    let mu_w = temporal::mu_w(&q);
    let rel = SuccRelation::new(s);
    for n in 0..horizon(s) {
        let acc = rel.accessible(n).is_accessible();
        ensure(mu_w.contains(q.state_of_position(n)) == acc, || format!("at {n}"))?;
    }
    Ok(())
}

fn sn_is_streamless(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let sn = SuccRelation::new(s).strongly_normalizing(0);
    ensure(sn == streamless(&DecSet::reds_of(s)), || "SN ≠ streamless".into())
}

fn af_is_nu_u(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let q = Quotient::new(s);
    let nu_u = temporal::nu_u(&q);
    let rel = SuccRelation::new(s);
    for n in 0..horizon(s) {
        ensure(nu_u.contains(q.state_of_position(n)) == rel.antifounded(n), || format!("at {n}"))?;
    }
    Ok(())
}

fn rank_law(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let rel = SuccRelation::new(s);
    for n in 0..horizon(s) {
        let reds_ahead = s
            .red_count()
            .map(|_| (n..s.prefix_len()).filter(|&k| s.at(k).is_red()).count());
        let rank = rel.accessible(n).rank();
        let chain = rel.chain_from(n).len();
        ensure(rank == chain && chain == reds_ahead, || {
            format!("at {n}: rank {rank:?}, chain {chain:?}, reds {reds_ahead:?}")
        })?;
    }
    Ok(())
}

fn on_characterization(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let rel = SuccRelation::new(s);
    for base in [PredicateId::GBlue, PredicateId::MuW] {
        let on_base = PredicateId::on(base.clone());
        for n in 0..=horizon(s) {
            let fix = decide(&on_base, &s.suffix(n));
            let via = rel.successor(n).is_none_or(|m| decide(&base, &s.suffix(m)));
            ensure(fix == via, || format!("on ({base}) at {n}"))?;
        }
    }
    Ok(())
}

fn pop_characterization(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let rel = SuccRelation::new(s);
    for base in [PredicateId::GBlue, PredicateId::MuW] {
        let pop_base = PredicateId::pop(base.clone());
        for n in 0..=horizon(s) {
            let fix = decide(&pop_base, &s.suffix(n));
            let via = rel.successor(n).is_some_and(|m| decide(&base, &s.suffix(m)));
            ensure(fix == via, || format!("pop ({base}) at {n}"))?;
        }
    }
    Ok(())
}

fn acc_trans(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let rel = SuccRelation::new(s);
    for n in 0..horizon(s) {
        match rel.accessible(n) {
            AccResult::Accessible { rank } => {
                for k in 1..=rank {
                    let m = rel
                        .transitive_closure_step(n, k)
                        .ok_or_else(|| format!("{n}: missing step {k}"))?;
                    ensure(rel.accessible(m).rank() == Some(rank - k), || format!("{n}: rank after {k}"))?;
                }
                ensure(rel.transitive_closure_step(n, rank + 1).is_none(), || format!("{n}: overlong"))?;
            }
            AccResult::NotAccessible => {
                for k in 1..=6 {
                    let m = rel
                        .transitive_closure_step(n, k)
                        .ok_or_else(|| format!("{n}: infinite chain stopped at {k}"))?;
                    ensure(!rel.accessible(m).is_accessible(), || format!("{n}: {m} accessible"))?;
                }
            }
        }
    }
    Ok(())
}

fn collapse(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let c = classify(s);
    let oracle = s.cycle_all_blue();
    for (name, v) in c.verdicts() {
        ensure(v.holds == oracle, || format!("{name} = {}, oracle {oracle}", v.holds))?;
    }
    Ok(())
}

fn atmost_is_bounded_size(s: &UpStream, ctx: &Ctx) -> Result<(), String> {
    let reds = DecSet::reds_of(s);
    for n in 0..=ctx.config.max_n {
        ensure(
            decide(&PredicateId::AtMost(n), s) == bounded_size(&reds, n),
            || format!("n = {n}"),
        )?;
    }
    Ok(())
}

/// Depth of the element-removal derivation, by brute force over subsets.
fn removal_rank(set: &BTreeSet<Position>) -> usize {
    set.iter()
        .map(|x| {
            let mut smaller = set.clone();
            smaller.remove(x);
            1 + removal_rank(&smaller)
        })
        .max()
        .unwrap_or(0)
}

fn noetherian_brute_force(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let a = DecSet::reds_of(s);
    match reds_enumerate(s) {
        Some(xs) if xs.len() <= 5 => {
            let brute = removal_rank(&xs.into_iter().collect());
            ensure(noetherian_rank(&a) == Some(brute), || format!("rank vs brute force {brute}"))
        }
        Some(_) => Ok(()),
        None => ensure(noetherian_rank(&a).is_none(), || "infinite set has a rank".into()),
    }
}

fn enumerated_is_fg_blue(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let listed = reds_enumerate(s);
    ensure(listed.is_some() == decide(&PredicateId::FGBlue, s), || "enum ≠ FG blue".into())?;
    if let Some(xs) = listed {
        let witness = classify(s).eventually_all_blue.witness;
        let expected = xs.last().map_or(0, |&l| l + 1);
        ensure(witness == Some(expected), || format!("witness {witness:?} vs {expected}"))?;
    }
    Ok(())
}

fn streamless_is_almost_full(s: &UpStream, _: &Ctx) -> Result<(), String> {
    ensure(
        almost_full_blues(s) == streamless(&DecSet::reds_of(s)),
        || "almost full ≠ streamless".into(),
    )
}

fn witness_consistency(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let c = classify(s);
    for (name, v) in c.verdicts().iter().take(4) {
        ensure(v.witness.is_some() == v.holds, || format!("{name}: witness presence"))?;
    }
    if let (Some(bound), Some(rank), Some(len), Some(xs)) = (
        c.boundedly_red.witness,
        c.almost_always_blue.witness,
        c.streamless_reds.witness,
        reds_enumerate(s),
    ) {
        ensure(bound == rank + 1 && rank == xs.len() && len == rank, || {
            format!("bound {bound}, rank {rank}, chain {len}, |reds| {}", xs.len())
        })?;
    }
    Ok(())
}

fn first_red_position(s: &UpStream) -> Option<Position> {
    (0..horizon(s)).find(|&n| s.at(n).is_red())
}

fn law_first_red_truncate(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let t = first_red_truncate(s);
    ensure(decide(&PredicateId::AtMost(2), &t), || format!("{t} is not atmost_2"))?;
    ensure(t.red_count() == Some(usize::from(first_red_position(s).is_some())), || {
        format!("{t} has the wrong number of reds")
    })
}

fn law_complement_until_red(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let t = complement_until_red(s);
    ensure(t.red_count() == first_red_position(s), || format!("{t}: red count"))?;
    ensure(
        !decide(&PredicateId::GBlue, &t) || s.at(0).is_red(),
        || format!("{t} all blue although {s} starts blue"),
    )?;
    ensure(
        decide(&PredicateId::GFRed, &t) == decide(&PredicateId::GBlue, s),
        || format!("{t}: G F red law"),
    )
}

fn law_pad_double(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let t = pad_double(s);
    ensure(!decide(&PredicateId::NuU, &t), || format!("{t} is infinitely often red"))?;
    if let Some(n) = first_red_position(s) {
        ensure(minimal_bound(&t) == Some(n + 2), || format!("{t}: bound"))?;
        for k in 0..3 * n + 3 {
            let expected = if (n..=2 * n).contains(&k) { Color::Red } else { Color::Blue };
            ensure(t.at(k) == expected, || format!("{t} at {k}"))?;
        }
    } else {
        ensure(t == UpStream::all_blue(), || format!("{t} should be all blue"))?;
    }
    Ok(())
}

fn law_search_tag(s: &UpStream, ctx: &Ctx) -> Result<(), String> {
    let t = search_tag(s);
    let first = first_red_position(s);
    ensure(t.red_count() == Some(first.unwrap_or(0)), || format!("{t}: red count"))?;
    ensure(
        decide(&PredicateId::GBlue, &t) == (first.is_none() || first == Some(0)),
        || format!("{t}: all-blue law"),
    )?;
    if let Some(k) = first.filter(|&k| k >= 1 && k < ctx.config.max_n) {
        ensure(
            decide(&PredicateId::FIter(k + 1), &t) && !decide(&PredicateId::FIter(k), &t),
            || format!("{t}: F^{k} boundary"),
        )?;
    }
    Ok(())
}

fn law_red_positions(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let reds = red_positions(s);
    ensure(reds.is_finite() == classify(s).streamless_reds.holds, || "finiteness".into())?;
    match &reds {
        RedPositions::Finite(xs) => {
            ensure(Some(xs.clone()) == reds_enumerate(s), || "differs from enumeration".into())
        }
        RedPositions::InfinitePeriodic(_) => {
            let limit = 3 * horizon(s);
            let direct: Vec<_> = (0..limit).filter(|&n| s.at(n).is_red()).collect();
            let listed: Vec<_> = reds.take(direct.len() + 1);
            ensure(listed[..direct.len()] == direct[..], || "periodic listing".into())
        }
    }
}

fn law_chain_to_colist(s: &UpStream, _: &Ctx) -> Result<(), String> {
    for start in 0..horizon(s) {
        let colist = chain_to_colist(s, start).take(2 * horizon(s));
        ensure(colist.iter().all(|&x| s.at(x).is_red()), || format!("from {start}: non-red element"))?;
        ensure(colist.windows(2).all(|w| w[0] < w[1]), || format!("from {start}: not increasing"))?;
    }
    Ok(())
}

fn literal_round_trip(s: &UpStream, _: &Ctx) -> Result<(), String> {
    let text = s.to_string();
    let back = parse_stream(&text).map_err(|e| e.to_string())?;
    ensure(back == *s, || format!("{text} parsed as {back}"))
}
