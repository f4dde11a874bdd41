//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::time::{Duration, Instant};

use dpcodes_core::verify::{
    check_cf_distance, check_matching, check_perfect_coloring, check_perfect_d3,
    check_transitivity, is_diameter_perfect, max_anticode_size, max_distance, min_distance,
    nonequivalence_certificate, pair_q_by_ball, sampled_min_distance, shorten_scan, Equivalence,
};
use dpcodes_core::{
    anticode_a, ball, build_d3, build_d4_conference, build_d5, chi, edge_distance, hamming_distance,
    parse_operator, shorten, BinaryWord, ColumnMap, Coset, D3Construction, D5Construction, Edge,
    FieldElement, FieldSpec, MOperator, PreparataConstruction, TernaryWord,
};

type Outcome = Result<Vec<String>, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn field(m: u32) -> FieldSpec {
    FieldSpec::default_for(m).expect("default field")
}

fn op(m: u32, literal: &str) -> MOperator {
    parse_operator(literal, field(m)).expect("operator literal")
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn d3_family() -> Outcome {
    let mut notes = Vec::new();
    for (m, lit) in [(2, "matrix2"), (3, "matrix3"), (4, "sum(matrix2,matrix2)")] {
        let code = e(build_d3(op(m, lit)))?;
        let n = code.n();
        ensure!(code.len() as u128 == 1u128 << (n - 1), "m={m}: |C| = {}", code.len());
        let (d, _) = e(min_distance(code.words()))?;
        ensure!(d == 3, "m={m}: distance {d}");
        let perfect = e(check_perfect_d3(n, code.words()))?;
        ensure!(perfect.passed(), "m={m}: {perfect}");
        let matching = e(check_matching(n, code.words()))?;
        ensure!(matching.report.passed(), "m={m}: {}", matching.report);
        notes.push(format!("m={m} {lit}: |C|={} d=3 perfect matching", code.len()));
    }
    Ok(notes)
}

fn transitivity() -> Outcome {
    let mut notes = Vec::new();
    for (m, lit) in [(2, "matrix2"), (3, "matrix3")] {
        let c = e(D3Construction::new(op(m, lit)))?;
        let code = e(c.materialize())?;
        let t = e(check_transitivity(code.words(), &c))?;
        ensure!(t.report.passed(), "m={m}: {}", t.report);
        ensure!(t.reached == code.len(), "m={m}: reached {}", t.reached);
        notes.push(format!("m={m}: {} of {} words reached, tau(C) = C each time", t.reached, code.len()));
    }
    Ok(notes)
}

fn shortening() -> Outcome {
    let g = e(build_d3(op(4, "sum(matrix2,matrix2)")))?;
    let h = e(build_d3(op(4, "gamma")))?;
    let scan = e(shorten_scan(16, g.words(), 4))?;
    ensure!(!scan.found.is_empty(), "no perfect shortening of C_g to X^4");
    let zero_tail: Vec<(usize, bool)> = (5..=16).map(|i| (i, false)).collect();
    ensure!(scan.found.contains(&zero_tail), "zero tail fixing missing");
    let short = e(shorten(&g, &zero_tail))?;
    ensure!(short.len() == 8, "shortened size {}", short.len());
    ensure!(e(check_perfect_d3(4, short.words()))?.passed(), "shortened code not perfect");
    let mut notes = vec![format!(
        "C_g: {} of {} fixings give a perfect code in X^4",
        scan.found.len(),
        scan.fixings_checked
    )];
    for k in [2, 4, 8] {
        let s = e(shorten_scan(16, h.words(), k))?;
        ensure!(s.found.is_empty(), "C_h shortens to X^{k} at {:?}", s.found[0]);
        notes.push(format!("C_h: none of {} fixings to X^{k}", s.fixings_checked));
    }
    let cert = e(nonequivalence_certificate(16, g.words(), h.words()))?;
    ensure!(cert.verdict == Equivalence::Nonequivalent, "certificate {:?}", cert);
    notes.push(format!("certificate {} separated at k={:?}", cert.verdict, cert.separating_k));
    Ok(notes)
}

fn d5_family() -> Outcome {
    let mut notes = Vec::new();
    for lit in ["pow:3", "inv"] {
        let code = e(build_d5(op(3, lit)))?;
        ensure!(code.len() == 16, "{lit}: |C| = {}", code.len());
        let (d, _) = e(min_distance(code.words()))?;
        ensure!(d >= 5, "{lit}: distance {d}");
        let anticode = ball(BinaryWord::zero(8), 2);
        let r = e(is_diameter_perfect(8, code.words(), &anticode))?;
        ensure!(r.passed() && anticode.len() == 64, "{lit}: {r}");
        notes.push(format!("m=3 {lit}: |C|=16 exact distance {d}, 16 * 64 = 1024"));
    }
    Ok(notes)
}

/// m = 5 is too large for an exhaustive scan: sampled pairs and membership,
/// reported but never asserted.
fn d5_sampled() -> Vec<String> {
    let Ok(c) = D5Construction::new(op(5, "pow:3")) else {
        return vec!["m=5: construction rejected the operator".into()];
    };
    let start = Instant::now();
    let sampled = sampled_min_distance(|rng| c.sample(rng), 1_000_000, 0x5eed);
    let size = c.cardinality() as u64;
    let members = (0..1000u64).all(|i| c.contains(&c.word_at(i * 65_537 % size)));
    vec![format!(
        "m=5 sampled (reported, not asserted): {} random pairs, smallest distance {}, \
         membership of 1000 enumerated words ok={members}, {} ms",
        sampled.pairs,
        sampled.observed_min,
        start.elapsed().as_millis()
    )]
}

fn preparata() -> Outcome {
    let p = e(PreparataConstruction::new(op(3, "pow:3")))?;
    let code = e(p.materialize())?;
    let (d, _) = e(min_distance(code.words()))?;
    ensure!((code.n(), code.len(), d) == (16, 256, 6), "parameters ({}, {}, {d})", code.n(), code.len());
    let uv = e(p.materialize_uv())?;
    ensure!(uv.words() == code.words(), "the two forms differ as sets");
    Ok(vec!["(16, 256, 6), both forms give the same set".into()])
}

fn operator_certificates() -> Outcome {
    for m in [3, 4, 5] {
        let cube = op(m, "pow:3");
        ensure!(cube.is_apn(), "x^3 not APN at m={m}");
        ensure!(cube.is_bijective() == (m % 2 == 1), "x^3 bijectivity wrong at m={m}");
    }
    for m in [3, 4, 5, 6] {
        ensure!(op(m, "inv").is_apn() == (m % 2 == 1), "inverse APN wrong at m={m}");
    }
    for (m, l) in [(3, 1), (5, 1), (5, 2)] {
        let g = e(MOperator::gold(field(m), l))?;
        ensure!(e(g.satisfies_propf())?, "gold({m},{l}) fails the six-element condition");
    }
    Ok(vec!["x^3 APN for m=3,4,5, bijective iff m odd; inverse APN iff m odd; Gold maps pass".into()])
}

fn d4_code() -> Outcome {
    let code = e(build_d4_conference())?;
    ensure!(code.len() == 12, "|C| = {}", code.len());
    let (d, _) = e(min_distance(code.words()))?;
    ensure!(d == 4, "distance {d}");
    let z: TernaryWord = e("*00000".parse())?;
    let a = anticode_a(&z);
    let r = e(is_diameter_perfect(6, code.words(), &a))?;
    ensure!(r.passed() && a.len() == 16, "{r}");
    let c = e(check_perfect_coloring(6, code.words()))?;
    ensure!(c.report.passed(), "{}", c.report);
    ensure!(c.sizes == (24, 40), "sizes {:?}", c.sizes);
    Ok(vec!["12 words, d=4, 12 * 16 = 192, coloring ((1,5),(3,3)) with |C1|=24 |C2|=40".into()])
}

fn anticodes() -> Outcome {
    for n in [4usize, 6, 8] {
        let z = TernaryWord::new(n, 2, 0b1011 & ((1 << n) - 1));
        let b = ball(z, 1);
        ensure!(b.len() == n && max_distance(&b) == 2, "B_z at n={n}");
        let a = anticode_a(&z);
        ensure!(a.len() == 3 * n - 2 && max_distance(&a) == 3, "A_z at n={n}");
        let b2 = ball(BinaryWord::zero(n), 2);
        ensure!(b2.len() == n * n && max_distance(&b2) == 4, "ball(0, 2) at n={n}");
    }
    let best = e(max_anticode_size(4, 2))?;
    ensure!(best == 4, "max diameter-2 anticode in X^4 has {best} words");
    Ok(vec!["sizes n, 3n-2, n^2 with diameters 2, 3, 4 for n = 4, 6, 8; max(4, 2) = 4".into()])
}

/// All permutations of `0..8` in lexicographic order.
fn permutations8() -> Vec<[u32; 8]> {
    let mut out = Vec::with_capacity(40320);
    let mut p = [0u32, 1, 2, 3, 4, 5, 6, 7];
    loop {
        out.push(p);
        let Some(i) = (0..7).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..8).rev().find(|&j| p[j] > p[i]).expect("successor");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

fn oracles() -> Outcome {
    let mut edges_checked = 0u64;
    for n in 1..=5usize {
        let edges: Vec<Edge> = (0..1u64 << n)
            .flat_map(|b| (1..=n).map(move |i| Edge::new(BinaryWord::new(n, b), i)))
            .filter(|e| !e.base().bit(e.direction()))
            .collect();
        for a in &edges {
            for b in &edges {
                let via_words = e(hamming_distance(chi(a), chi(b)))?;
                ensure!(edge_distance(a, b) == via_words, "edge distance mismatch at n={n}");
                edges_checked += 1;
            }
        }
    }
    let mut points = 0u64;
    for m in 2..=3 {
        let f = field(m);
        let cols = [ColumnMap::identity(f), ColumnMap::from_operator(&op(m, "inv"))];
        for qcols in cols {
            let qcols = std::sync::Arc::new(e(qcols)?);
            let pcols = std::sync::Arc::new(e(ColumnMap::identity(f))?);
            for beta in f.enumerate() {
                for gamma in f.enumerate() {
                    let p = e(Coset::even(pcols.clone(), beta))?;
                    let q = e(Coset::odd(qcols.clone(), gamma))?;
                    for x in p.members() {
                        let fast = e(dpcodes_core::pair_q(&x, &p, &q))?;
                        ensure!(pair_q_by_ball(&x, &q) == vec![fast], "pair_q mismatch at {x}");
                        points += 1;
                    }
                }
            }
        }
    }
    let f3 = field(3);
    let mut apn = 0;
    for perm in permutations8() {
        let f = e(MOperator::from_table(f3, perm.iter().map(|&v| FieldElement(v)).collect()))?;
        if !f.is_apn() {
            continue;
        }
        apn += 1;
        let d = e(check_cf_distance(&f3, &f))?;
        ensure!(d.is_none_or(|d| d >= 6), "C_f distance {d:?} for table {perm:?}");
    }
    ensure!(apn > 0, "no APN permutations found");
    Ok(vec![format!(
        "{edges_checked} edge pairs, {points} pairings, C_f >= 6 for all {apn} APN permutations of GF(8)"
    )])
}

struct Criterion {
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
    /// Untimed extra output printed after the verdict line.
    report: Option<fn() -> Vec<String>>,
}

fn main() {
    let criteria = [
        Criterion { title: "distance-3 family", limit: Duration::from_secs(5), run: d3_family, report: None },
        Criterion { title: "transitivity", limit: Duration::from_secs(10), run: transitivity, report: None },
        Criterion { title: "shortening dichotomy", limit: Duration::from_secs(300), run: shortening, report: None },
        Criterion { title: "distance-5 family", limit: Duration::from_secs(1), run: d5_family, report: Some(d5_sampled) },
        Criterion { title: "Preparata-like code", limit: Duration::from_secs(1), run: preparata, report: None },
        Criterion { title: "operator certificates", limit: Duration::from_secs(60), run: operator_certificates, report: None },
        Criterion { title: "distance-4 code", limit: Duration::from_secs(1), run: d4_code, report: None },
        Criterion { title: "anticode suite", limit: Duration::from_secs(60), run: anticodes, report: None },
        Criterion { title: "oracle cross-checks", limit: Duration::from_secs(30), run: oracles, report: None },
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(_) if elapsed > c.limit => (false, vec![format!("over the {:?} limit", c.limit)]),
            Ok(notes) => (true, notes),
            Err(reason) => (false, vec![reason]),
        };
        failures += usize::from(!ok);
        println!(
            "{} criterion {}: {} ({:.2} s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            c.title,
            elapsed.as_secs_f64()
        );
        for line in detail.into_iter().chain(c.report.map(|f| f()).unwrap_or_default()) {
            println!("     {line}");
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
