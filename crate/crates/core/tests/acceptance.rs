//! Acceptance criteria, each checked exhaustively over the family of
//! canonical streams with `|prefix| ≤ 5` and `|cycle| ≤ 4`.
//!
//! Oracles here scan positions directly and never go through the fixpoint
//! engine or the succession module. Run with `--nocapture` to see one
//! PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use finred::constructions::{complement_until_red, first_red_truncate, pad_double, search_tag};
use finred::notions::{
    almost_full_blues, bounded_size, classify, noetherian_rank, reds_enumerate, streamless,
};
use finred::{
    check_black_box, decide, f2s_up, minimal_bound, s2f, Color, DecSet, PredicateId,
    SuccRelation, UpStream, Verdict3,
};

const MAX_PREFIX: usize = 5;
const MAX_CYCLE: usize = 4;
const MAX_N: usize = 8;
const TIME_LIMIT: Duration = Duration::from_secs(10);

type Outcome = Result<(), String>;
type Criterion = fn(&[UpStream]) -> Outcome;

fn words(len: usize) -> Vec<Vec<Color>> {
    (0..1usize << len)
        .map(|bits| {
            (0..len)
                .map(|i| if bits >> i & 1 == 1 { Color::Red } else { Color::Blue })
                .collect()
        })
        .collect()
}

/// Every raw `(prefix, cycle)` pair within the bounds.
fn raw_family() -> Vec<UpStream> {
    let mut all = Vec::new();
    for p in 0..=MAX_PREFIX {
        for c in 1..=MAX_CYCLE {
            for prefix in words(p) {
                for cycle in words(c) {
                    all.push(UpStream::new(prefix.clone(), cycle).unwrap());
                }
            }
        }
    }
    all
}

fn family() -> Vec<UpStream> {
    let set: BTreeSet<_> = raw_family().iter().map(UpStream::canonicalize).collect();
    set.into_iter().collect()
}

fn window(s: &UpStream) -> usize {
    s.prefix_len() + s.cycle_len()
}

fn oracle_cycle_all_blue(s: &UpStream) -> bool {
    let (p, c) = (s.prefix_len(), s.cycle_len());
    (p..p + c).all(|n| s.at(n) == Color::Blue)
}

fn oracle_red_count(s: &UpStream) -> Option<usize> {
    oracle_cycle_all_blue(s).then(|| (0..window(s)).filter(|&n| s.at(n) == Color::Red).count())
}

fn oracle_first_red(s: &UpStream) -> Option<usize> {
    (0..window(s)).find(|&n| s.at(n) == Color::Red)
}

fn oracle_reds_from(s: &UpStream, n: usize) -> Option<usize> {
    oracle_cycle_all_blue(s).then(|| (n..n.max(s.prefix_len())).filter(|&k| s.at(k) == Color::Red).count())
}

/// `n ≻ m` by scanning: `m` is one past the first red at or after `n`.
fn oracle_successor(s: &UpStream, n: usize) -> Option<usize> {
    (n..n + window(s)).find(|&k| s.at(k) == Color::Red).map(|l| l + 1)
}

fn oracle_g_blue_at(s: &UpStream, m: usize) -> bool {
    (m..m + window(s)).all(|k| s.at(k) == Color::Blue)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1_collapse(fam: &[UpStream]) -> Outcome {
    let start = Instant::now();
    for s in fam {
        let oracle = oracle_cycle_all_blue(s);
        for (name, v) in classify(s).verdicts() {
            check(v.holds == oracle, || format!("{s}: {name} = {}, oracle {oracle}", v.holds))?;
        }
    }
    let took = start.elapsed();
    check(took < TIME_LIMIT, || format!("took {took:?}"))
}

fn criterion_2_f_iter_is_atmost(fam: &[UpStream]) -> Outcome {
    let start = Instant::now();
    for s in fam {
        for n in 0..=MAX_N {
            let f = decide(&PredicateId::FIter(n), s);
            let a = decide(&PredicateId::AtMost(n), s);
            let count = oracle_red_count(s).is_some_and(|r| r < n);
            check(f == count && a == count, || format!("{s}, n = {n}: F^n {f}, atmost {a}, oracle {count}"))?;
        }
    }
    let took = start.elapsed();
    check(took < TIME_LIMIT, || format!("took {took:?}"))
}

fn criterion_3_accessibility_trinity(fam: &[UpStream]) -> Outcome {
    for s in fam {
        let rel = SuccRelation::new(s);
        let mu_w = decide(&PredicateId::MuW, s);
        check(mu_w == rel.accessible(0).is_accessible(), || format!("{s}: μW vs Acc"))?;
        let sl = streamless(&DecSet::reds_of(s));
        check(sl == rel.strongly_normalizing(0), || format!("{s}: streamless vs SN"))?;
        let nu_u = decide(&PredicateId::NuU, s);
        check(nu_u == rel.antifounded(0), || format!("{s}: νU vs af"))?;
    }
    Ok(())
}

fn criterion_4_rank_law(fam: &[UpStream]) -> Outcome {
    for s in fam {
        let rel = SuccRelation::new(s);
        let rank = rel.accessible(0).rank();
        let chain = rel.chain_from(0).len();
        let listed = reds_enumerate(s).map(|xs| xs.len());
        let bound = minimal_bound(s).map(|b| b - 1);
        let oracle = oracle_red_count(s);
        check(
            rank == chain && chain == listed && listed == bound && bound == oracle,
            || format!("{s}: rank {rank:?} chain {chain:?} enum {listed:?} bound-1 {bound:?} oracle {oracle:?}"),
        )?;
        for n in 0..window(s) + s.cycle_len() {
            let (r, o) = (rel.accessible(n).rank(), oracle_reds_from(s, n));
            check(r == o, || format!("{s} at {n}: rank {r:?}, oracle {o:?}"))?;
        }
    }
    Ok(())
}

fn criterion_5_until_characterizations(fam: &[UpStream]) -> Outcome {
    for s in fam {
        let limit = s.prefix_len() + 2 * s.cycle_len();
        for n in 0..=limit {
            let suffix = s.suffix(n);
            let succ = oracle_successor(s, n);
            // X = G blue
            let x_after = succ.map(|m| oracle_g_blue_at(s, m));
            let on = decide(&PredicateId::on(PredicateId::GBlue), &suffix);
            let pop = decide(&PredicateId::pop(PredicateId::GBlue), &suffix);
            check(on == x_after.unwrap_or(true), || format!("{s} at {n}: on (G blue)"))?;
            check(pop == x_after.unwrap_or(false), || format!("{s} at {n}: pop (G blue)"))?;
            // X = μW, which holds on a suffix iff the cycle is all blue
            let x_after = succ.map(|_| oracle_cycle_all_blue(s));
            let on = decide(&PredicateId::on(PredicateId::MuW), &suffix);
            let pop = decide(&PredicateId::pop(PredicateId::MuW), &suffix);
            check(on == x_after.unwrap_or(true), || format!("{s} at {n}: on μW"))?;
            check(pop == x_after.unwrap_or(false), || format!("{s} at {n}: pop μW"))?;
        }
    }
    Ok(())
}

fn criterion_6_transformer_laws(fam: &[UpStream]) -> Outcome {
    for s in fam {
        let first = oracle_first_red(s);
        let t = first_red_truncate(s);
        check(decide(&PredicateId::AtMost(2), &t), || format!("{s}: atmost_2 ({t})"))?;
        let t = complement_until_red(s);
        check(oracle_red_count(&t) == first, || format!("{s}: complement_until_red gave {t}"))?;
        let t = pad_double(s);
        check(!decide(&PredicateId::NuU, &t), || format!("{s}: νU ({t})"))?;
        let t = search_tag(s);
        check(oracle_red_count(&t) == Some(first.unwrap_or(0)), || format!("{s}: search_tag gave {t}"))?;
    }
    Ok(())
}

/// Height of the element-removal derivation, by exhaustive recursion.
fn removal_rank(set: &BTreeSet<usize>) -> usize {
    set.iter()
        .map(|x| {
            let mut rest = set.clone();
            rest.remove(x);
            1 + removal_rank(&rest)
        })
        .max()
        .unwrap_or(0)
}

/// Height of the initial-segment-removal derivation.
fn segment_removal_rank(set: &BTreeSet<usize>) -> usize {
    set.iter()
        .map(|&x| 1 + segment_removal_rank(&set.iter().copied().filter(|&y| y > x).collect()))
        .max()
        .unwrap_or(0)
}

fn criterion_7_set_finiteness(fam: &[UpStream]) -> Outcome {
    for s in fam {
        let reds = DecSet::reds_of(s);
        for n in 0..=MAX_N {
            check(
                decide(&PredicateId::AtMost(n), s) == bounded_size(&reds, n),
                || format!("{s}: atmost_{n} vs bounded_{n}"),
            )?;
        }
        check(
            reds_enumerate(s).is_some() == decide(&PredicateId::FGBlue, s),
            || format!("{s}: enumerated vs F G blue"),
        )?;
    }
    // every finite subset of 0..8 with at most five members
    for bits in 0u32..1 << 8 {
        if bits.count_ones() > 5 {
            continue;
        }
        let members: Vec<usize> = (0..8).filter(|i| bits >> i & 1 == 1).collect();
        let set: BTreeSet<usize> = members.iter().copied().collect();
        let a = DecSet::from_finite(&members);
        let (noet, noet_prime) = (removal_rank(&set), segment_removal_rank(&set));
        check(noet == noet_prime, || format!("{members:?}: Noet {noet} vs Noet' {noet_prime}"))?;
        check(noetherian_rank(&a) == Some(noet), || format!("{members:?}: rank {:?}", noetherian_rank(&a)))?;
    }
    for s in fam.iter().filter(|s| !oracle_cycle_all_blue(s)) {
        check(noetherian_rank(&DecSet::reds_of(s)).is_none(), || format!("{s}: infinite set has a rank"))?;
    }
    Ok(())
}

fn criterion_8_round_trip_and_equality(fam: &[UpStream]) -> Outcome {
    for s in fam {
        let back = f2s_up(&s2f(s), s.prefix_len(), s.cycle_len()).map_err(|e| format!("{s}: {e}"))?;
        check(back.bisimilar(s), || format!("{s}: round trip gave {back}"))?;
    }
    let raw = raw_family();
    for (i, r) in raw.iter().enumerate() {
        // compare against a spread of other raw representations
        for t in raw.iter().skip(i % 7).step_by(7) {
            let w = r.prefix_len() + t.prefix_len() + lcm(r.cycle_len(), t.cycle_len());
            let pointwise = (0..w).all(|n| r.at(n) == t.at(n));
            check(r.bisimilar(t) == pointwise, || format!("{r} vs {t}"))?;
        }
    }
    Ok(())
}

fn lcm(a: usize, b: usize) -> usize {
    let gcd = (1..=a.min(b)).rev().find(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d)).unwrap();
    a / gcd * b
}

fn criterion_9_black_box_soundness(fam: &[UpStream]) -> Outcome {
    for s in fam {
        let f = s2f(s);
        for fuel in [1, 4, 64] {
            for p in [PredicateId::FRed, PredicateId::GBlue] {
                let exact = decide(&p, s);
                let verdict = check_black_box(&p, &f, fuel).map_err(|e| e.to_string())?;
                let ok = match verdict {
                    Verdict3::Holds => exact,
                    Verdict3::Fails => !exact,
                    Verdict3::Unknown { .. } => true,
                };
                check(ok, || format!("{s}, {p}, fuel {fuel}: {verdict:?} but exact {exact}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_10_downward_hierarchy(fam: &[UpStream]) -> Outcome {
    for s in fam {
        let c = classify(s);
        let fg = c.eventually_all_blue.holds;
        let bounded = c.boundedly_red.holds;
        let mu_w = c.almost_always_blue.holds;
        let sl = c.streamless_reds.holds;
        let nn = c.not_not_fg_blue.holds;
        let not_gf = c.not_gf_red.holds;
        check(!fg || bounded, || format!("{s}: FG ⇏ bounded"))?;
        check(!bounded || mu_w, || format!("{s}: bounded ⇏ μW"))?;
        check(!mu_w || (sl && nn), || format!("{s}: μW ⇏ streamless ∧ ¬¬FG"))?;
        check(!sl || not_gf, || format!("{s}: streamless ⇏ ¬GF red"))?;
        check(!nn || not_gf, || format!("{s}: ¬¬FG ⇏ ¬GF red"))?;
        check(almost_full_blues(s) == sl, || format!("{s}: almost full vs streamless"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let fam = family();
    assert!(fam.len() > 500, "family has {} streams", fam.len());
    let criteria: [(&str, Criterion); 10] = [
        ("1 collapse of the six notions", criterion_1_collapse),
        ("2 F^n equals atmost_n", criterion_2_f_iter_is_atmost),
        ("3 accessibility trinity", criterion_3_accessibility_trinity),
        ("4 rank law", criterion_4_rank_law),
        ("5 on/pop characterizations", criterion_5_until_characterizations),
        ("6 transformer laws", criterion_6_transformer_laws),
        ("7 set finiteness equivalences", criterion_7_set_finiteness),
        ("8 round trip and bisimilarity", criterion_8_round_trip_and_equality),
        ("9 black-box soundness", criterion_9_black_box_soundness),
        ("10 downward hierarchy", criterion_10_downward_hierarchy),
    ];
    println!("family: {} canonical streams", fam.len());
    let mut failures = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        match run(&fam) {
            Ok(()) => println!("PASS criterion {name} ({:.2?})", start.elapsed()),
            Err(msg) => {
                println!("FAIL criterion {name}: {msg}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
