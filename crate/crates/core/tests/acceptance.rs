//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unexpected_curves::arith::Backend;
use unexpected_curves::arrangement::{
    combinatorially_equivalent, dual_arrangement, is_full_rank, is_supersolvable, max_multiplicity, modular_points,
    sing_at_least, LineArrangement, PointConfiguration,
};
use unexpected_curves::certifier::{
    certify, certify_degree, certify_problem_b, certify_with, definition_check, dual_splitting, further_scheme,
};
use unexpected_curves::generators::{
    b3_arrangement, b3_configuration, hexagon_chain, hexagon_lines, octagon_chain, octagon_lines, pencil, polygonal,
    tictactoe, FieldChoice, HexStage, OctStage, TicTacToe,
};
use unexpected_curves::geometry::{dualize_point, incident, ProjLine, ProjPoint};
use unexpected_curves::interpolation::{
    expected_dimension, generic_fat_dimension, ideal_dimension, merge_reports, FatPointScheme, SamplingOptions,
};
use unexpected_curves::splitting::{
    chain_from_supersolvable, empirical_splitting, restriction_count, supersolvable_splitting, SplittingType,
};

type Outcome = Result<(bool, String), String>;

const FIELD_A: FieldChoice = FieldChoice::Prime { bits: 31, seed: 11 };
const FIELD_B: FieldChoice = FieldChoice::Prime { bits: 31, seed: 12 };

fn opts() -> SamplingOptions {
    SamplingOptions::default()
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn st(a: usize, b: usize) -> SplittingType {
    SplittingType::new(a, b)
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn b3_flagship() -> Outcome {
    let z = b3_configuration();
    let mut ok = true;
    let mut notes = Vec::new();
    for (route, o) in [("modular", opts()), ("exact", opts().exact())] {
        let v = certify(&z, &o).map_err(s)?;
        let interval = v.interval.map(|i| (i.low, i.high));
        let min_dim = v.minimal_dimension.as_ref().map(|d| (d.dimension, d.stable));
        let curve_ok = match &v.curve {
            Some(c) => c.degree == 4 && c.multiplicity == 3 && c.verify(&z).map_err(s)?,
            None => false,
        };
        let dim4 = ideal_dimension(&z, &FatPointScheme::empty(), 4, &o).map_err(s)?;
        let expected = expected_dimension(&z, &FatPointScheme::generic(3, 7), 4, &o).map_err(s)?;
        let this = v.admits
            && v.splitting == Some(st(3, 5))
            && interval == Some((3, 4))
            && min_dim == Some((1, true))
            && curve_ok
            && dim4.dimension == 6
            && dim4.stable
            && expected == 0;
        ok &= this;
        notes.push(format!(
            "{route}: admits={} splitting={:?} interval={:?} dim[I(Z+3Q)]_4={:?} curve={} dim[I(Z)]_4={} expected={}",
            v.admits,
            v.splitting.map(|t| t.to_string()),
            interval,
            min_dim,
            curve_ok,
            dim4.dimension,
            expected
        ));
    }
    Ok((ok, notes.join("; ")))
}

fn polygonal_sweep() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 3..=8usize {
        let mut verdicts = Vec::new();
        let mut minimal = Vec::new();
        for field in [FIELD_A, FIELD_B] {
            let p = polygonal(n, false, field).map_err(s)?;
            let pb = polygonal(n, true, field).map_err(s)?;
            let vp = certify_with(&p.dual_configuration(), &opts(), false).map_err(s)?;
            let vb = certify_with(&pb.dual_configuration(), &opts(), false).map_err(s)?;
            let emp = empirical_splitting(&pb, &opts()).map_err(s)?;
            let ss = if n % 2 == 0 {
                Some(supersolvable_splitting(&pb).map_err(s)?)
            } else {
                None
            };
            if let Some(d) = &vb.minimal_dimension {
                minimal.push(d.clone());
            }
            verdicts.push((vp.admits, vb.admits, vb.interval.map(|i| (i.low, i.high)), emp, ss));
        }
        let agree = verdicts[0] == verdicts[1];
        let (p_admits, pb_admits, interval, emp, ss) = verdicts[0].clone();
        let merged = if minimal.len() == 2 {
            Some(merge_reports(&minimal).map_err(s)?)
        } else {
            None
        };
        let this = if n % 2 == 0 {
            !p_admits
                && pb_admits
                && interval == Some((n - 1, n))
                && merged.as_ref().is_some_and(|m| m.dimension == 1 && m.stable)
                && ss == Some(st(n - 1, n + 1))
                && emp == st(n - 1, n + 1)
        } else {
            !p_admits && !pb_admits
        };
        ok &= this && agree;
        notes.push(format!(
            "N={n}: P admits={p_admits} Pbar admits={pb_admits} interval={interval:?} empirical={emp}{}{}{}",
            ss.map(|t| format!(" supersolvable={t}")).unwrap_or_default(),
            if n % 2 == 1 { " (odd N: construction-dependent)" } else { "" },
            if agree { "" } else { " FIELDS DISAGREE" }
        ));
    }
    Ok((ok, notes.join("; ")))
}

fn tictactoe_criterion() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (k, j) in [(1usize, 0usize), (1, 1), (2, 1), (2, 2)] {
        let want = st(2 * k + 1 + 2 * j, 2 * k + 3 + 2 * j);
        let tb = tictactoe(k, j, true).map_err(s)?;
        let base = tictactoe(k, 0, true).map_err(s)?;
        let extra: Vec<ProjLine> = (0..j).flat_map(TicTacToe::next_diagonals).collect();
        let chain = chain_from_supersolvable(&base, &extra).map_err(s)?;
        let chain_ok = chain.arrangement().map_err(s)?.len() == tb.len();
        let emp = empirical_splitting(&tb, &opts()).map_err(s)?;
        let count = restriction_count(&tb, &TicTacToe::diagonal(j as i64 + 1)).map_err(s)?;
        let v = certify_with(&tb.dual_configuration(), &opts(), false).map_err(s)?;
        let deg = 2 * (k + j + 1);
        let curve_ok = v.admits
            && v.interval.is_some_and(|i| i.contains(deg))
            && v.minimal_dimension.as_ref().is_some_and(|d| d.dimension == 1 && d.degree == deg);
        let this = chain_ok && chain.terminus() == want && emp == want && count == 2 * k + 2 * j + 4 && curve_ok;
        ok &= this;
        notes.push(format!(
            "T({k},{j}): chain={} empirical={emp} count(d_{})={count} admits={} interval={}",
            chain.terminus(),
            j + 1,
            v.admits,
            v.interval.map(|i| i.to_string()).unwrap_or("-".into())
        ));
    }
    Ok((ok, notes.join("; ")))
}

fn hexagon_criterion() -> Outcome {
    let h = hexagon_lines();
    let base = LineArrangement::new(h.base.clone()).map_err(s)?;
    let cert = chain_from_supersolvable(&base, &h.added()).map_err(s)?;
    let n0 = cert.steps.len() - 24;
    let counts = &cert.counts()[n0..];
    // sequence() starts with the base type
    let seq = &cert.sequence()[n0 + 1..];
    let mut want = Vec::new();
    want.extend((1..=6).map(|i| st(5 + i, 7)));
    want.extend((1..=6).map(|i| st(11, 7 + i)));
    want.extend((1..=6).map(|i| st(11 + i, 13)));
    want.extend((1..=6).map(|i| st(17, 13 + i)));
    let base_t = cert.sequence()[n0];
    let emp_base = empirical_splitting(&base, &opts()).map_err(s)?;
    let mut stage_emp = Vec::new();
    for stage in &HexStage::all()[1..] {
        stage_emp.push(empirical_splitting(&hexagon_chain(*stage).map_err(s)?, &opts()).map_err(s)?);
    }
    let emp_ok = stage_emp == want;
    let seq_ok = seq == &want[..] && base_t == st(5, 7) && emp_base == st(5, 7) && emp_ok;
    let counts_ok = counts[..6].iter().all(|&c| c == 8) && counts[6..12].iter().all(|&c| c == 12);

    let mut admit_ok = true;
    let mut admit_notes = Vec::new();
    for (stage, deg) in [
        (HexStage::B(4), 8),
        (HexStage::B(5), 9),
        (HexStage::B(6), 10),
    ] {
        let v = certify_with(&hexagon_chain(stage).map_err(s)?.dual_configuration(), &opts(), false).map_err(s)?;
        let good = v.admits && v.interval.is_some_and(|i| i.contains(deg) && i.high == deg);
        admit_ok &= good;
        admit_notes.push(format!("{stage}:{}", v.interval.map(|i| i.to_string()).unwrap_or("none".into())));
    }
    // reported alongside, not part of the criterion
    for stage in [HexStage::BPrime(1), HexStage::BPrime(2), HexStage::BPrime(6)] {
        let v = certify_with(&hexagon_chain(stage).map_err(s)?.dual_configuration(), &opts(), false).map_err(s)?;
        admit_notes.push(format!("{stage}:{}", v.interval.map(|i| i.to_string()).unwrap_or("none".into())));
    }
    let b6p = hexagon_chain(HexStage::BPrime(6)).map_err(s)?;
    let dual = dual_arrangement(&hexagon_chain(HexStage::Base).map_err(s)?).map_err(s)?;
    let equiv = combinatorially_equivalent(&b6p, &dual);
    Ok((
        seq_ok && counts_ok && admit_ok && equiv,
        format!(
            "sequence {} ; empirical per stage matches = {emp_ok} ; counts {:?} ; intervals {} ; B'6 ~ dual(Sing(P6bar)) = {equiv}",
            seq.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("->"),
            counts,
            admit_notes.join(" ")
        ),
    ))
}

fn octagon_criterion() -> Outcome {
    let mut per_field = Vec::new();
    for field in [FIELD_A, FIELD_B] {
        let mut rows = Vec::new();
        for stage in OctStage::all() {
            let a = octagon_chain(stage, field).map_err(s)?;
            let emp = empirical_splitting(&a, &opts()).map_err(s)?;
            let v = certify_with(&a.dual_configuration(), &opts(), false).map_err(s)?;
            rows.push((stage, emp, v.admits));
        }
        let o = octagon_lines(field).map_err(s)?;
        let (lines, _) = o.added();
        let chain = chain_from_supersolvable(&o.base, &lines).map_err(s)?;
        let n0 = chain.steps.len() - 16;
        per_field.push((rows, chain.sequence()[n0 + 1..].to_vec()));
    }
    let agree = per_field[0] == per_field[1];
    let (rows, chain_seq) = &per_field[0];
    let mut ok = agree;
    let mut notes = Vec::new();
    for (stage, emp, admits) in rows {
        let (want, want_admits) = match *stage {
            OctStage::Base => (st(7, 9), true),
            OctStage::L(i) => (st(7 + i as usize, 9), (4..=8).contains(&i)),
            OctStage::M(j) => (st(15, 9 + j as usize), [1, 2, 3, 4, 8].contains(&j)),
        };
        let good = *emp == want && (*stage == OctStage::Base || *admits == want_admits);
        ok &= good;
        notes.push(format!("{stage}:{emp}{}", if *admits { "*" } else { "" }));
    }
    let stages: Vec<SplittingType> = rows[1..].iter().map(|r| r.1).collect();
    let chain_ok = *chain_seq == stages;
    ok &= chain_ok;
    Ok((
        ok,
        format!(
            "{} (* = admits); chain route matches = {chain_ok}; fields agree = {agree}",
            notes.join(" ")
        ),
    ))
}

fn random_grid_configuration(rng: &mut ChaCha8Rng, n: usize) -> PointConfiguration {
    let mut pts: Vec<ProjPoint> = Vec::new();
    while pts.len() < n {
        let p = if rng.gen_bool(0.15) {
            ProjPoint::rational(rng.gen_range(-3..=3), rng.gen_range(-3..=3), 0)
        } else {
            ProjPoint::rational(rng.gen_range(-3..=3), rng.gen_range(-3..=3), 1)
        };
        if let Ok(p) = p {
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    PointConfiguration::new(pts).expect("distinct")
}

fn structured_pool() -> Vec<PointConfiguration> {
    let mut pool = vec![b3_configuration()];
    for (k, j, c) in [(1, 0, true), (1, 1, false), (1, 1, true), (2, 0, true), (2, 1, false)] {
        pool.push(tictactoe(k, j, c).expect("valid").dual_configuration());
    }
    pool.push(hexagon_chain(HexStage::Base).expect("valid").dual_configuration());
    pool.push(pencil(5, Backend::Rational).expect("valid").dual_configuration());
    pool
}

/// Image under a random invertible integer matrix.
fn projective_image(rng: &mut ChaCha8Rng, z: &PointConfiguration) -> PointConfiguration {
    loop {
        let m: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-2..=2)));
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det == 0 {
            continue;
        }
        let pts = z
            .points()
            .iter()
            .map(|p| {
                let c = p.integer_coords().expect("rational");
                let c: Vec<i64> = c.iter().map(|v| i64::try_from(v).expect("small")).collect();
                let r: Vec<i64> = (0..3).map(|i| (0..3).map(|k| m[i][k] * c[k]).sum()).collect();
                ProjPoint::rational(r[0], r[1], r[2]).expect("invertible")
            })
            .collect();
        return PointConfiguration::new(pts).expect("invertible");
    }
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pool = structured_pool();
    let mut configs = Vec::new();
    for i in 0..50 {
        let size = rng.gen_range(6..=14);
        if i % 2 == 0 {
            configs.push(random_grid_configuration(&mut rng, size));
        } else if i % 4 == 1 {
            let src = pool.choose(&mut rng).expect("nonempty");
            configs.push(projective_image(&mut rng, src));
        } else {
            let src = pool.choose(&mut rng).expect("nonempty");
            let mut pts = src.points().to_vec();
            pts.shuffle(&mut rng);
            pts.truncate(size);
            while pts.len() < size {
                let extra = random_grid_configuration(&mut rng, 1).points()[0].clone();
                if !pts.contains(&extra) {
                    pts.push(extra);
                }
            }
            configs.push(PointConfiguration::new(pts).expect("distinct"));
        }
    }
    let mut checked = 0;
    let mut admitting = 0;
    let mut mismatches = Vec::new();
    for (idx, z) in configs.iter().enumerate() {
        let v = certify_with(z, &opts(), false).map_err(s)?;
        for c in 2..=z.len() {
            let def = definition_check(z, c, &opts()).map_err(s)?;
            let thm12 = v.admits && v.interval.is_some_and(|i| i.contains(c));
            let thm15 = certify_degree(z, c, &opts()).map_err(s)?;
            checked += 1;
            admitting += usize::from(def.unexpected);
            if thm12 != def.unexpected || !thm15.consistent || !def.stable {
                mismatches.push(format!("config {idx} degree {c}"));
            }
        }
    }
    Ok((
        mismatches.is_empty() && admitting > 0,
        format!(
            "{} configurations, {checked} (Z, degree) pairs, {admitting} unexpected by definition, mismatches: {:?}",
            configs.len(),
            mismatches
        ),
    ))
}

fn further_criterion() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let b6 = hexagon_chain(HexStage::B(6)).map_err(s)?.dual_configuration();
    for (name, z) in [("B3", b3_configuration()), ("B6 dual", b6)] {
        let t = dual_splitting(&z, &opts()).map_err(s)?;
        let (a, b) = (t.a(), t.b());
        let top = b.checked_sub(a + 2).ok_or("b - a < 2")?;
        let mut dims = Vec::new();
        for r in 0..=top {
            let d = generic_fat_dimension(&z, a + r, &opts()).map_err(s)?;
            ok &= d.dimension == r + 1 && d.stable;
            dims.push(d.dimension);
        }
        let mut further = Vec::new();
        for j in 0..=top {
            let x = further_scheme(a, j, 0x5eed).map_err(s)?;
            let v = certify_problem_b(&z, &x, a + 1 + j, &opts()).map_err(s)?;
            ok &= v.admits && v.actual.dimension == 1 && v.actual.stable;
            further.push(format!("j={j}:{}/{}", v.actual.dimension, v.expected));
        }
        let beyond = certify_problem_b(&z, &further_scheme(a, top + 1, 0x5eed).map_err(s)?, a + 2 + top, &opts())
            .map_err(s)?;
        notes.push(format!(
            "{name} {t}: dim[I(Z+(a+r)Q)]_(a+r+1) for r=0..{top} = {dims:?}; fat plus simple actual/expected {}; j={} beyond range admits={}",
            further.join(" "),
            top + 1,
            beyond.admits
        ));
    }
    Ok((ok, notes.join("; ")))
}

fn suite_families() -> Result<Vec<LineArrangement>, String> {
    let mut v = vec![pencil(5, Backend::Rational).map_err(s)?, b3_arrangement()];
    for n in 3..=8 {
        v.push(polygonal(n, false, FIELD_A).map_err(s)?);
        v.push(polygonal(n, true, FIELD_A).map_err(s)?);
    }
    for (k, j) in [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)] {
        v.push(tictactoe(k, j, false).map_err(s)?);
        v.push(tictactoe(k, j, true).map_err(s)?);
    }
    for stage in HexStage::all() {
        v.push(hexagon_chain(stage).map_err(s)?);
    }
    for stage in OctStage::all() {
        v.push(octagon_chain(stage, FIELD_A).map_err(s)?);
    }
    v.push(dual_arrangement(&polygonal(4, true, FIELD_A).map_err(s)?).map_err(s)?);
    v.push(dual_arrangement(&hexagon_chain(HexStage::Base).map_err(s)?).map_err(s)?);
    Ok(v)
}

fn invariant_suite() -> Outcome {
    let families = suite_families()?;
    let mut failures = Vec::new();
    let mut supersolvable = 0;
    for a in &families {
        let label = a.label().unwrap_or("?").to_string();
        let d = a.len();
        let locus = a.singular_locus();
        let sum: usize = locus.entries.iter().map(|e| binom2(e.multiplicity())).sum();
        if sum != binom2(d) {
            failures.push(format!("{label}: partition identity"));
        }
        let mut outputs = vec![empirical_splitting(a, &opts()).map_err(s)?];
        let (ss, _) = is_supersolvable(a);
        if ss {
            supersolvable += 1;
            outputs.push(supersolvable_splitting(a).map_err(s)?);
            outputs.push(chain_from_supersolvable(a, &[]).map_err(s)?.terminus());
            let modular = modular_points(a);
            let m = max_multiplicity(a);
            let mult = |p: &ProjPoint| locus.entries.iter().find(|e| &e.point == p).map(|e| e.multiplicity());
            let min_modular = modular.iter().filter_map(mult).min().unwrap_or(0);
            for e in &locus.entries {
                let is_mod = modular.contains(&e.point);
                if !is_mod && e.multiplicity() >= min_modular {
                    failures.push(format!("{label}: non-modular point of multiplicity {}", e.multiplicity()));
                }
                if e.multiplicity() == m && !is_mod {
                    failures.push(format!("{label}: maximal point not modular"));
                }
            }
            if is_full_rank(a) {
                let doubles = locus.entries.iter().filter(|e| e.multiplicity() == 2).count();
                if doubles + m < d {
                    failures.push(format!("{label}: |Sing_2| + m = {} < {d}", doubles + m));
                }
            }
        }
        for t in outputs {
            if t.total() + 1 != d {
                failures.push(format!("{label}: {t} does not sum to {}", d - 1));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    for _ in 0..100 {
        let n = rng.gen_range(3..=10);
        let z = random_grid_configuration(&mut rng, n);
        let deg = rng.gen_range(1..=5);
        let j = rng.gen_range(0..=deg);
        let o = opts().with_seed(rng.gen());
        let with_j = |m: usize| {
            if m == 0 {
                FatPointScheme::empty()
            } else {
                FatPointScheme::generic(m, 3)
            }
        };
        let dj = ideal_dimension(&z, &with_j(j), deg, &o).map_err(s)?.dimension;
        let dj1 = ideal_dimension(&z, &with_j(j + 1), deg, &o).map_err(s)?.dimension;
        let base = ideal_dimension(&z, &FatPointScheme::empty(), deg, &o).map_err(s)?.dimension;
        let smaller = PointConfiguration::new(z.points()[1..].to_vec()).map_err(s)?;
        let base_smaller = ideal_dimension(&smaller, &FatPointScheme::empty(), deg, &o).map_err(s)?.dimension;
        let expected = expected_dimension(&z, &with_j(j), deg, &o).map_err(s)?;
        // a special support point off Z never does better than a generic one
        let special = loop {
            let q = ProjPoint::rational(rng.gen_range(-5..=5), rng.gen_range(-5..=5), 1).map_err(s)?;
            if !z.points().contains(&q) {
                break q;
            }
        };
        let ds = if j == 0 {
            dj
        } else {
            ideal_dimension(&z, &FatPointScheme::point(special, j), deg, &o).map_err(s)?.dimension
        };
        let lower = (binom2(deg + 2) as i64 - n as i64).max(0) as usize;
        checked += 1;
        let good = dj1 <= dj && base <= base_smaller && dj >= expected && ds >= dj && base >= lower;
        if !good {
            failures.push(format!(
                "random n={n} deg={deg} j={j}: dims j={dj} j+1={dj1} base={base} smaller={base_smaller} expected={expected} special={ds}"
            ));
        }
    }
    Ok((
        failures.is_empty(),
        format!(
            "{} families ({supersolvable} supersolvable), {checked} random dimension instances, failures: {:?}",
            families.len(),
            failures
        ),
    ))
}

fn duality_pipelines() -> Outcome {
    let b6p = hexagon_chain(HexStage::BPrime(6)).map_err(s)?;
    let p6 = hexagon_chain(HexStage::Base).map_err(s)?;
    let sing = sing_at_least(&p6, 2);
    let dual = sing.dual_arrangement().map_err(s)?;
    let b6p_equiv = sing.len() == b6p.len() && combinatorially_equivalent(&b6p, &dual);
    let counts_equal = b6p.singular_locus().multiplicity_counts() == dual.singular_locus().multiplicity_counts();

    let mut ok = b6p_equiv && counts_equal;
    let mut notes = vec![format!("B'6 ~ dual(Sing(P6bar)): {b6p_equiv} (counts equal: {counts_equal})")];
    let mut signatures = Vec::new();
    for field in [FIELD_A, FIELD_B] {
        let p4 = polygonal(4, true, field).map_err(s)?;
        let ad = dual_arrangement(&p4).map_err(s)?;
        // each singular point of P4bar becomes a line through the duals of its lines
        let duals: Vec<ProjLine> = p4.lines().to_vec();
        let mut incidence_ok = true;
        for e in &p4.singular_locus().entries {
            let l = dualize_point(&e.point);
            let on: usize = duals
                .iter()
                .map(|m| incident(&unexpected_curves::geometry::dualize_line(m), &l))
                .collect::<Result<Vec<bool>, _>>()
                .map_err(s)?
                .into_iter()
                .filter(|&b| b)
                .count();
            incidence_ok &= on == e.multiplicity();
        }
        let sum: usize = ad.singular_locus().entries.iter().map(|e| binom2(e.multiplicity())).sum();
        let s3 = sing_at_least(&ad, 3).len();
        let s4 = sing_at_least(&ad, 4).len();
        let iso_b3 = combinatorially_equivalent(&p4, &b3_arrangement());
        let good = ad.len() == 13 && sum == binom2(13) && s3 == 13 && incidence_ok && iso_b3;
        ok &= good;
        signatures.push((ad.singular_locus().multiplicity_counts(), s3, s4));
        notes.push(format!(
            "P4bar^d over {}: {} lines, counts {:?}, |Sing>=3| = {s3}, |Sing>=4| = {s4}, incidences {incidence_ok}, P4bar ~ B3 {iso_b3}",
            ad.backend(),
            ad.len(),
            ad.singular_locus().multiplicity_counts()
        ));
    }
    ok &= signatures[0] == signatures[1];
    notes.push("sporadic table entries with unpublished coordinates are not targets".into());
    Ok((ok, notes.join("; ")))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "B3 flagship", budget: Duration::from_secs(1), run: b3_flagship },
        Criterion { id: 2, name: "polygonal sweep N=3..8", budget: Duration::from_secs(30), run: polygonal_sweep },
        Criterion { id: 3, name: "tic-tac-toe", budget: Duration::from_secs(120), run: tictactoe_criterion },
        Criterion { id: 4, name: "hexagon chains", budget: Duration::from_secs(120), run: hexagon_criterion },
        Criterion { id: 5, name: "octagon chains", budget: Duration::from_secs(120), run: octagon_criterion },
        Criterion { id: 6, name: "oracle equivalence", budget: Duration::from_secs(300), run: oracle_equivalence },
        Criterion { id: 7, name: "uniqueness and further curves", budget: Duration::from_secs(60), run: further_criterion },
        Criterion { id: 8, name: "invariant suite", budget: Duration::from_secs(300), run: invariant_suite },
        Criterion { id: 9, name: "duality pipelines", budget: Duration::from_secs(60), run: duality_pipelines },
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    let mut summary = BTreeMap::new();
    for c in criteria.iter().filter(|c| filter.is_empty() || filter.contains(&c.id)) {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (pass, detail) = match outcome {
            Ok((p, d)) => (p && elapsed <= c.budget, d),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        summary.insert(c.id, pass);
        println!(
            "[{}] {}. {} ({:.2}s, budget {}s): {}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            detail
        );
    }
    println!("{} of {} criteria passed", summary.len() - failed, summary.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
