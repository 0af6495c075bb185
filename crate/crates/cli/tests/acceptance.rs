//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use serde_json::Value;

use theta_hecke::json;
use theta_hecke_core::bipartition::{
    bipartitions_of, decompose, is_multiplicity_free, module_decomposition_formula, pieri_add, pieri_remove, r1,
    theta_lift, Bipartition, WlCharTable,
};
use theta_hecke_core::dualpair::{amr_lift, conservation_check, lusztig_unipotent, mu_sigma, CaseTag, TowerConfig};
use theta_hecke_core::hecke::{HeckeAlgebra, HeckeParams};
use theta_hecke_core::partition::{partitions_up_to, Partition};
use theta_hecke_core::ring::Laurent;
use theta_hecke_core::thetamod::{grade_dim, ThetaModule};
use theta_hecke_core::weyl::{enum_classes, factorial, hyperoctahedral_group, symmetric_group, ClassType};
use theta_hecke_core::{HalfInt, ParabolicSpec};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn h(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec())
}

fn hecke_relations() -> Check {
    let t = Instant::now();
    let mut count = 0;
    for l in 0..=4 {
        for twice in [-4, -3, -2, 0, 1, 2, 3, 4] {
            let alg = HeckeAlgebra::new(Laurent, HeckeParams::bc(l, h(twice)));
            let rep = alg.relation_report().map_err(|e| e.to_string())?;
            for (name, ok) in rep {
                ensure(ok, || format!("l={} mu={}: {} fails", l, h(twice), name))?;
                count += 1;
            }
        }
    }
    let dt = t.elapsed();
    ensure(dt.as_secs() < 60, || format!("took {:.1?}", dt))?;
    Ok(format!("{} relation instances exact in {:.2?}", count, dt))
}

fn module_relations() -> Check {
    let t = Instant::now();
    let pairs = [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)];
    // Four or more parameters from the range of every case.
    let mus = [-5, -3, -1, 1, 3, -6, -2, 2, 6, -4, 0, 4, 8];
    let mut checked = 0;
    for (l, lp) in pairs {
        for twice in mus {
            let m = ThetaModule::new(Laurent, l, lp, h(twice)).map_err(|e| e.to_string())?;
            let rep = m.verify_relations();
            if let Some(bad) = rep.results.iter().find(|r| r.failure.is_some()) {
                return Err(format!("({},{}) mu={}: {} fails", l, lp, h(twice), bad.name));
            }
            if (l, lp) == (3, 3) {
                ensure(m.dim() == 139, || format!("(3,3) has dimension {}", m.dim()))?;
            }
            checked += rep.results.len();
        }
    }
    let dt = t.elapsed();
    ensure(dt.as_secs() < 600, || format!("took {:.1?}", dt))?;
    Ok(format!("{} relations over 7 size pairs x {} parameters, exact, {:.2?}", checked, mus.len(), dt))
}

fn large_module_note() -> String {
    let t = Instant::now();
    match ThetaModule::new(Laurent, 4, 4, h(1)) {
        Ok(m) => {
            let ok = m.verify_relations().all_pass();
            format!(
                "(4,4) dimension {} symbolic relations {} in {:.2?}",
                m.dim(),
                if ok { "hold" } else { "FAIL" },
                t.elapsed()
            )
        }
        Err(e) => format!("(4,4) could not be built: {}", e),
    }
}

fn dimensions() -> Check {
    for l in 0..=5 {
        for lp in 0..=5 {
            for k in 0..=l.min(lp) {
                let d = ParabolicSpec::AinA { l, k }.distinguished_reps().map_err(|e| e.to_string())?.len();
                let dp = ParabolicSpec::Mixed { lp, k }.distinguished_reps().map_err(|e| e.to_string())?.len();
                let enumerated = (d * dp) as u128 * factorial(k);
                ensure(enumerated == grade_dim(l, lp, k), || format!("({},{}) k={}", l, lp, k))?;
            }
            if l <= 3 && lp <= 3 {
                let m = ThetaModule::new(Laurent, l, lp, h(1)).map_err(|e| e.to_string())?;
                for (k, &g) in m.grade_dims().iter().enumerate() {
                    ensure(g as u128 == grade_dim(l, lp, k), || format!("basis ({},{}) k={}", l, lp, k))?;
                }
            }
        }
    }
    Ok(String::from("per-grade dimensions agree with coset enumeration for l, l' <= 5"))
}

/// `sum_k Ind_{W_{l-k} x W_k x W_{l'-k}}(eps (x) eps (x) eps)` from class
/// data alone.
fn induced_sign_character(left: &WlCharTable, right: &WlCharTable) -> Vec<Vec<i64>> {
    let (l, lp) = (left.l, right.l);
    let merge = |a: &Partition, b: &Partition| {
        let mut v = a.parts().to_vec();
        v.extend_from_slice(b.parts());
        Partition::new(v)
    };
    let join = |a: &ClassType, b: &ClassType| ClassType {
        positive: merge(&a.positive, &b.positive),
        negative: merge(&a.negative, &b.negative),
    };
    let eps = |c: &ClassType| if c.negative.len().is_multiple_of(2) { 1i128 } else { -1 };
    let order = |n: usize| (1u128 << n) * factorial(n);
    let mut total = vec![vec![0i128; right.classes.len()]; left.classes.len()];
    for k in 0..=l.min(lp) {
        let sub = (order(l - k) * order(k) * order(lp - k)) as i128;
        let whole = (order(l) * order(lp)) as i128;
        let mut acc = vec![vec![0i128; right.classes.len()]; left.classes.len()];
        for (a, _, na) in enum_classes(l - k) {
            for (c, _, nc) in enum_classes(k) {
                for (b, _, nb) in enum_classes(lp - k) {
                    let i = left.class_index(&join(&a, &c)).unwrap();
                    let j = right.class_index(&join(&c, &b)).unwrap();
                    acc[i][j] += (na * nc * nb) as i128 * eps(&a) * eps(&c) * eps(&b);
                }
            }
        }
        for (i, (_, ni)) in left.classes.iter().enumerate() {
            for (j, (_, nj)) in right.classes.iter().enumerate() {
                total[i][j] += acc[i][j] * whole / (sub * *ni as i128 * *nj as i128);
            }
        }
    }
    total.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect()
}

type Decomposition = BTreeMap<(Bipartition, Bipartition), i64>;

fn nu1_data() -> Result<Vec<(usize, usize, Decomposition)>, String> {
    let mut out = Vec::new();
    for l in 0..=3 {
        for lp in 0..=3 {
            let m = ThetaModule::new(Laurent, l, lp, h(1)).map_err(|e| e.to_string())?;
            let (a, b) = (WlCharTable::new(l), WlCharTable::new(lp));
            let chi = m.character_nu1(&a, &b).map_err(|e| e.to_string())?;
            ensure(chi == induced_sign_character(&a, &b), || format!("({},{}) character differs from induced", l, lp))?;
            let d = decompose(&a, &b, &chi).map_err(|e| e.to_string())?;
            out.push((l, lp, d));
        }
    }
    Ok(out)
}

fn nu1_decomposition(data: &[(usize, usize, Decomposition)]) -> Check {
    for (l, lp, d) in data {
        ensure(*d == module_decomposition_formula(*l, *lp), || format!("({},{}) multiplicities differ", l, lp))?;
    }
    Ok(format!("{} size pairs: characters equal induced sums, multiplicities match", data.len()))
}

fn lift_consistency(data: &[(usize, usize, Decomposition)]) -> Check {
    let mut pairs = 0;
    for (l, lp, d) in data {
        for a in bipartitions_of(*l) {
            let lift = theta_lift(&a.first, &a.second, *l, *lp).map_err(|e| e.to_string())?;
            for b in bipartitions_of(*lp) {
                let m = d.get(&(a.clone(), b.clone())).copied().unwrap_or(0);
                let c = lift.get(&b).copied().unwrap_or(0);
                ensure(m == c, || format!("({},{}) {} -> {}: module {} vs lift {}", l, lp, a, b, m, c))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{} label pairs agree", pairs))
}

fn multiplicity_free() -> Check {
    let mut n = 0;
    for l in 0..=6 {
        for a in bipartitions_of(l) {
            for lp in 0..=6 {
                let lift = theta_lift(&a.first, &a.second, l, lp).map_err(|e| e.to_string())?;
                ensure(is_multiplicity_free(&lift), || format!("{} to W_{}", a, lp))?;
                n += 1;
            }
        }
    }
    Ok(format!("{} lifts multiplicity free", n))
}

fn f4_mul(a: u8, b: u8) -> u8 {
    let mut r = 0u8;
    for i in 0..2 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    if r & 4 != 0 {
        r ^= 0b111;
    }
    r
}

/// `(|U_2(F_2)|, sum_g (-2)^{dim ker(g - 1)})` by enumeration over `F_4`.
fn unitary_oracle() -> (usize, i64) {
    let conj = |a: u8| f4_mul(a, a);
    let (mut count, mut total) = (0, 0i64);
    for code in 0u32..256 {
        let g = [[(code & 3) as u8, (code >> 2 & 3) as u8], [(code >> 4 & 3) as u8, (code >> 6 & 3) as u8]];
        let unitary = (0..2)
            .all(|i| (0..2).all(|j| g.iter().fold(0, |s, row| s ^ f4_mul(conj(row[i]), row[j])) == (i == j) as u8));
        if !unitary {
            continue;
        }
        count += 1;
        let a = [[g[0][0] ^ 1, g[0][1]], [g[1][0], g[1][1] ^ 1]];
        let det = f4_mul(a[0][0], a[1][1]) ^ f4_mul(a[0][1], a[1][0]);
        let rank = if a.iter().flatten().all(|&x| x == 0) {
            0
        } else if det == 0 {
            1
        } else {
            2
        };
        total += (-2i64).pow(2 - rank);
    }
    (count, total)
}

fn conservation() -> Check {
    let mut rows = 0;
    let mut c1_off = 0;
    for case in CaseTag::ALL {
        for v0 in 0..=4 {
            for vp0 in 0..=10 {
                let Ok(cfg) = TowerConfig::new(case, v0, vp0) else { continue };
                for l in 0..=6 {
                    for b in bipartitions_of(l) {
                        let r = conservation_check(&b.first, &b.second, l, &cfg).map_err(|e| e.to_string())?;
                        ensure(r.residual_c2 == 0, || format!("{:?} {}: {:?}", cfg, b, r))?;
                        if r.residual_c1 != 0 {
                            c1_off += 1;
                        }
                        rows += 1;
                    }
                }
            }
        }
    }
    let (order, sum) = unitary_oracle();
    ensure(order == 18 && sum == 0, || format!("unitary oracle: order {}, sum {}", order, sum))?;
    let e = Partition::empty();
    let ex = conservation_check(&p(&[1]), &e, 1, &TowerConfig::new(CaseTag::A, 0, 1).unwrap()).unwrap();
    ensure((ex.lhs_c2, ex.lhs_c1, ex.rhs) == (5, 4, 5), || format!("{:?}", ex))?;
    Ok(format!(
        "{} rows with n+n~+2c residual 0; n+n~+c misses on {} rows (every row with c > 0); U_2(F_2) sum = 0 over 18 elements",
        rows, c1_off
    ))
}

fn unipotent() -> Check {
    for m in 0..=6usize {
        let u = lusztig_unipotent(m);
        let expect = (m * (m + 1) / 2, m.saturating_sub(1) * m / 2, (m + 1) * (m + 2) / 2);
        ensure((u.dim_v, u.first_occ_low, u.first_occ_high) == expect, || format!("m={}: {:?}", m, u))?;
        ensure(u.mu == h(2 * m as i64 + 1), || format!("m={}: mu {}", m, u.mu))?;
        ensure(mu_sigma(u.first_occ_high, u.first_occ_low) == u.mu, || format!("m={}", m))?;
    }
    let e = Partition::empty();
    let a = amr_lift(0, 1, 1, &e, &p(&[1])).map_err(|e| e.to_string())?;
    let expect: BTreeMap<Bipartition, i64> =
        [(Bipartition::new(e.clone(), p(&[1])), 1), (Bipartition::new(p(&[1]), e.clone()), 1)].into_iter().collect();
    ensure(a == expect, || format!("amr lift {:?}", a))?;
    ensure(amr_lift(0, 1, 0, &p(&[1]), &e).map_err(|e| e.to_string())?.is_empty(), || String::from("nonzero"))?;
    Ok(String::from("m <= 6 data and the (0,1,1) lift reproduced"))
}

fn combinatorics() -> Check {
    let parts = partitions_up_to(6);
    for a in &parts {
        for b in &parts {
            if b.size() >= a.size() {
                let i = b.size() - a.size();
                ensure(pieri_add(a, i).contains(b) == pieri_remove(b, i).contains(a), || format!("{} {}", a, b))?;
            }
        }
    }
    for lam in partitions_up_to(10) {
        ensure(r1(&lam) == lam.first(), || format!("r1 {}", lam))?;
    }
    for l in 0..=4 {
        let t = WlCharTable::new(l);
        for i in 0..t.irreps.len() {
            for j in 0..t.irreps.len() {
                let (s, o) = t.inner(&t.values[i], &t.values[j]);
                ensure(s == if i == j { o } else { 0 }, || format!("orthogonality l={}", l))?;
            }
        }
    }
    for d in 0..=4 {
        let t = WlCharTable::new(d);
        let sd = symmetric_group(d);
        let order = hyperoctahedral_group(d).len() as i64;
        for (c, (ct, size)) in t.classes.iter().enumerate() {
            let hits = sd.iter().filter(|w| &w.class_type() == ct).count() as i64;
            let induced = order * hits / (sd.len() as i64 * *size as i64);
            let row = |a: usize| {
                let b = Bipartition::new(p(&[a]), p(&[d - a]));
                t.values[t.irrep_index(&b).unwrap()][c]
            };
            let sum: i64 = (0..=d).map(row).sum();
            ensure(induced == sum, || format!("branching d={}", d))?;
        }
    }
    Ok(String::from("adjointness, r1, orthogonality and branching exact"))
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_theta-hecke")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn determinism() -> Check {
    let runs: [&[&str]; 6] = [
        &["theta-lift", "--alpha", "[]", "--beta", "[1]", "--l", "1", "--lprime", "1"],
        &["hecke-mul", "--l", "2", "--mu", "1/2", "--a", "s1 t", "--b", "t s1"],
        &["module-matrix", "--l", "2", "--lprime", "1", "--mu", "-3/2"],
        &["module-verify", "--l", "2", "--lprime", "2", "--mu", "-3/2", "--jobs", "3"],
        &["conservation-scan", "--case", "A", "--dimV0", "0", "--dimVp0", "1", "--lmax", "3"],
        &["specialize-decompose", "--l", "2", "--lprime", "1"],
    ];
    for args in runs {
        let (c1, o1) = cli(args);
        let (c2, o2) = cli(args);
        ensure(c1 == 0 && c2 == 0, || format!("{:?} exited {} / {}", args, c1, c2))?;
        ensure(o1 == o2, || format!("{:?} output differs between runs", args))?;
        let v: Value = serde_json::from_slice(&o1).map_err(|e| format!("{:?}: {}", args, e))?;
        ensure(json::render(&v).as_bytes() == o1.as_slice(), || {
            format!("{:?} does not re-serialize identically", args)
        })?;
    }
    let (_, o) = cli(runs[0]);
    let v: Value = serde_json::from_slice(&o).unwrap();
    let lift = json::parse_virtual_sum(&v).map_err(|e| e.to_string())?;
    ensure(json::virtual_sum(&lift) == v, || String::from("virtual sum round trip"))?;
    let (_, o) = cli(runs[1]);
    let v: Value = serde_json::from_slice(&o).unwrap();
    let prod = json::parse_hecke(&v).map_err(|e| e.to_string())?;
    ensure(json::hecke(&prod) == v, || String::from("Hecke element round trip"))?;
    let (_, o) = cli(runs[2]);
    let v: Value = serde_json::from_slice(&o).unwrap();
    for m in v["matrices"].as_array().unwrap() {
        for col in m["columns"].as_array().unwrap() {
            for entry in col.as_array().unwrap() {
                let poly = json::parse_laurent(&entry["coeff"]).map_err(|e| e.to_string())?;
                ensure(json::laurent(&poly) == entry["coeff"], || String::from("Laurent round trip"))?;
            }
        }
    }
    Ok(format!("{} commands byte-identical across runs; JSON round-trips", runs.len()))
}

fn main() {
    let mut failed = 0;
    let mut report = |n: usize, name: &str, r: Check| {
        match &r {
            Ok(msg) => println!("criterion {:>2} PASS  {}: {}", n, name, msg),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {}", n, name, msg)
            }
        };
    };
    report(1, "Hecke relation suite", hecke_relations());
    report(2, "module relation suite", module_relations());
    println!("             info  {}", large_module_note());
    report(3, "dimension identity", dimensions());
    match nu1_data() {
        Ok(data) => {
            report(4, "v = 1 decomposition", nu1_decomposition(&data));
            report(5, "theta lift / module consistency", lift_consistency(&data));
        }
        Err(e) => {
            report(4, "v = 1 decomposition", Err(e.clone()));
            report(5, "theta lift / module consistency", Err(e));
        }
    }
    report(6, "multiplicity freeness", multiplicity_free());
    report(7, "conservation", conservation());
    report(8, "unipotent reproduction", unipotent());
    report(9, "combinatorial oracles", combinatorics());
    report(10, "determinism and round trips", determinism());
    if failed > 0 {
        println!("{} criteria failed", failed);
        std::process::exit(1);
    }
    println!("all 10 criteria pass");
}
