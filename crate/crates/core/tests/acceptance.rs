//! Acceptance criteria, each checked exactly. Prints one line per
//! criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use picard::chartab::{block_data, BlockData, CharacterTable};
use picard::commands::{cmd_perf, cmd_verify, render, Format};
use picard::cyclo::{in_2m_o, root_sum_scan, CycNum};
use picard::groups::table::standard;
use picard::groups::{iso_test, AutomorphismGroup, FiniteGroup, SignedPerm, SignedPermGroup};
use picard::isometry::{perf_enumerate, perf_exhaustive, PerfectnessChecker};
use picard::matring::{normalizer_report, subgroup_conjugacy_count, NormalizerMethod, OddShape};
use picard::picassembly::claimed::{dual_by_automorphisms, frobenius_type};
use picard::picassembly::{assemble, ingredient_report_for_sl28, verify, CaseSpec};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn block(s: &str) -> Result<BlockData, String> {
    block_data(&s.parse().map_err(err)?).map_err(err)
}

fn perf(s: &str) -> Result<SignedPermGroup, String> {
    Ok(perf_enumerate(&block(s)?).map_err(err)?.group)
}

fn same_elements(a: &SignedPermGroup, b: &SignedPermGroup) -> bool {
    a.sorted_elements() == b.sorted_elements()
}

fn criterion_1() -> Check {
    let b = block("G(1)")?;
    let pruned = perf_enumerate(&b).map_err(err)?.group;
    let oracle = perf_exhaustive(&b).map_err(err)?;
    ensure(pruned.order() == 48, format!("|Perf(OA4)| = {}", pruned.order()))?;
    ensure(same_elements(&pruned, &oracle), "pruned and exhaustive sets differ")?;
    let s4c2 = standard::symmetric(4).direct_product(&standard::cyclic(2)).map_err(err)?;
    ensure(iso_test(&pruned.table_group().map_err(err)?, &s4c2), "not isomorphic to S4 x C2")?;
    Ok("Perf(OA4) has order 48, is S4 x C2, and matches the 384-candidate oracle".into())
}

fn criterion_2() -> Check {
    let mut out = Vec::new();
    for (fam, moduli, expected) in [("P(1)", vec![2usize], 4usize), ("P(2)", vec![4], 16), ("P(1,1)", vec![2, 2], 48)] {
        let g = perf(fam)?;
        let p = moduli
            .iter()
            .map(|&m| standard::cyclic(m))
            .reduce(|a, b| a.direct_product(&b).expect("small"))
            .expect("nonempty");
        let hom = p.order();
        let aut = p.automorphisms().len();
        ensure(g.order() == expected && expected == hom * aut * 2, format!("|Perf({fam})| = {}", g.order()))?;
        let claimed = dual_by_automorphisms(&p).direct_product(&standard::cyclic(2)).map_err(err)?;
        ensure(iso_test(&g.table_group().map_err(err)?, &claimed), format!("Perf({fam}) is not Aut(OP) x C2"))?;
        out.push(g.order().to_string());
    }
    let oracle = perf_exhaustive(&block("P(1)")?).map_err(err)?;
    ensure(same_elements(&oracle, &perf("P(1)")?), "oracle disagrees on C2")?;
    Ok(format!("Perf(OP) orders {} for C2, C4, C2xC2", out.join(", ")))
}

/// Signed Kronecker product `(a, b) -> (J a, I b)`, rows ordered `a * k2 + b`.
fn kron(j: &SignedPerm, i: &SignedPerm) -> SignedPerm {
    let (k1, k2) = (j.degree(), i.degree());
    let mut perm = vec![0; k1 * k2];
    let mut signs = vec![0i8; k1 * k2];
    for a in 0..k1 {
        for b in 0..k2 {
            let (ja, s) = j.image(a);
            let (ib, t) = i.image(b);
            perm[a * k2 + b] = ja * k2 + ib;
            signs[a * k2 + b] = s * t;
        }
    }
    SignedPerm::new(perm, signs).expect("valid")
}

fn criterion_3() -> Check {
    let pa4 = perf("G(1)")?;
    let mut orders = Vec::new();
    for p in ["P(1)", "P(2)", "P(1,1)"] {
        let pp = perf(p)?;
        let prod = perf(&format!("{p}xG(1)"))?;
        let factored: BTreeSet<SignedPerm> =
            pp.elements.iter().flat_map(|j| pa4.elements.iter().map(move |i| kron(j, i))).collect();
        let got: BTreeSet<SignedPerm> = prod.elements.iter().cloned().collect();
        ensure(factored == got, format!("Perf(O({p} x A4)) does not factor"))?;
        orders.push(prod.order());
    }
    ensure(orders[0] == 96, format!("order {} for P = C2", orders[0]))?;
    Ok(format!("every perfect self-isometry of O(P x A4) factors; orders {orders:?}"))
}

fn criterion_4() -> Check {
    let mut total = 0;
    for n in 1..=3 {
        for m in 1..=2 {
            let (checked, bad) = root_sum_scan(n, m);
            if let Some(b) = bad.first() {
                return Err(format!("counterexample at n = {n}, m = {m}: {b:?}"));
            }
            total += checked;
        }
    }
    Ok(format!("{total} tuples, zero counterexamples"))
}

fn criterion_5() -> Check {
    let mut seen = Vec::new();
    for n in 1u32..=2 {
        let b = block(&format!("G({n})xA5"))?;
        let q = 1i64 << (2 * n);
        let (want_lin, want_non) = (8 * (q + 2) / 3, 4 * (q + 2));
        // rows are (G_n character) * 4 + (ψ1, ψ2, ψ3, ψ5)
        for (a, &deg) in b.degrees.iter().enumerate() {
            let v = b.pairing_invariant(a);
            if a % 4 == 3 && deg == 5 {
                ensure(v == want_lin, format!("n = {n}: linear ⊗ ψ5 gives {v}"))?;
            }
            if a % 4 == 0 && deg > 1 {
                ensure(v == want_non, format!("n = {n}: nonlinear ⊗ ψ1 gives {v}"))?;
            }
        }
        seen.push(format!("{want_lin}/{want_non}"));
    }
    Ok(format!("pairing invariants {} at n = 1, 2", seen.join(", ")))
}

fn criterion_6() -> Check {
    let mut n = 0;
    for case in CaseSpec::all(2, 4) {
        let real = assemble(&case).map_err(err)?;
        let r = verify(&real).map_err(err)?;
        ensure(r.passed, format!("{case}: {:?}", r.failures))?;
        ensure(r.iso_type_matched && r.perfectness_all && r.picent_trivial, format!("{case}"))?;
        if let CaseSpec::Borel { n } = case {
            let want = frobenius_type((1 << n) - 1, n as usize);
            ensure(iso_test(&real.group.table_group().map_err(err)?, &want), format!("{case} is not C_(2^n-1) x| C_n"))?;
        }
        n += 1;
    }
    for (case, order) in [
        ("thm-main-i,P=1,n=1", 6),
        ("thm-main-v,n=1", 21),
        ("thm-main-iv,n=1", 12),
        ("thm-main-ii,n1=1,n2=1", 72),
        ("borel,n=2", 6),
    ] {
        let r = cmd_verify(case, 2, 4).map_err(err)?;
        ensure(r.reports[0].order == order, format!("{case}: order {}", r.reports[0].order))?;
    }
    Ok(format!("{n} cases realized with claimed order and type, all perfect, Picent trivial"))
}

fn criterion_7() -> Check {
    let q = |k, n, s| normalizer_report(k, n, s, NormalizerMethod::Auto).map(|r| r.quotient_order).map_err(err);
    for n in 1..=3 {
        let o = q(2, n, OddShape::C3)?;
        ensure(o.is_power_of_two(), format!("N(C3)/C3 has order {o} at n = {n}"))?;
    }
    for n in 1..=2 {
        let o = q(3, n, OddShape::C7)?;
        ensure(o % 3 == 0 && (o / 3).is_power_of_two() && o % 9 != 0, format!("N(C7)/C7 has order {o} at n = {n}"))?;
    }
    let classes = subgroup_conjugacy_count(OddShape::F21, 3, 1).map_err(err)?;
    ensure(classes == 1, format!("{classes} classes of C7:C3 in GL3(2)"))?;
    let r = normalizer_report(3, 1, OddShape::F21, NormalizerMethod::Auto).map_err(err)?;
    ensure(r.normalizer_order == 21, "C7:C3 is not self-normalizing in GL3(2)")?;
    Ok("normalizer quotients are 2-groups / 3 * 2^j; C7:C3 unique and self-normalizing".into())
}

fn criterion_8() -> Check {
    let mut out = Vec::new();
    for (fam, k, shape) in [("G(1)", 2, OddShape::C3), ("E8:C7", 3, OddShape::C7), ("E8:F21", 3, OddShape::F21)] {
        let g = FiniteGroup::build(&fam.parse().map_err(err)?).map_err(err)?;
        let aut = AutomorphismGroup::compute(&g.table_group().map_err(err)?).map_err(err)?;
        let brute = aut.out_group().map_err(err)?.order();
        let lin = normalizer_report(k, 1, shape, NormalizerMethod::Auto).map_err(err)?.quotient_order;
        ensure(brute == lin, format!("{fam}: |Out| = {brute} but |N/E| = {lin}"))?;
        out.push(format!("{fam}:{brute}"));
    }
    Ok(format!("|Out(G)| = |N_Aut(D)(E)/E| for {}", out.join(", ")))
}

fn criterion_9() -> Check {
    let r = ingredient_report_for_sl28().map_err(err)?;
    ensure(r.normalizer_quotient_order == 1, "normalizer quotient")?;
    ensure(r.hom_part_order == 3, "Hom part")?;
    ensure(r.degrees == [1, 1, 1, 7, 7, 7, 21, 27], "degree list")?;
    ensure(r.fixed_degrees.len() == 2 && r.cycle_type == [1, 1, 3, 3], "tensoring cycle structure")?;
    Ok("Aut(SL2(8)): quotient 1, Hom part 3, two fixed points and two 3-cycles".into())
}

fn criterion_10() -> Check {
    for fam in ["G(1)", "G(2)", "A5", "F21", "E8:C7", "E8:F21", "E(2):C7", "B(2)", "B(3)", "B(4)", "P(1)xG(1)", "G(1)xA5", "G(1)xG(2)"] {
        let t = CharacterTable::for_family(&fam.parse().map_err(err)?).map_err(err)?;
        t.check_orthogonality().map_err(|e| format!("{fam}: {e}"))?;
    }
    for fam in ["G(1)", "P(1)", "P(1,1)"] {
        let b = block(fam)?;
        let g = perf(fam)?;
        let c = PerfectnessChecker::new(&b, &b).map_err(err)?;
        for x in &g.elements {
            ensure(c.is_perfect(x) && g.contains(&x.inverse()), format!("{fam}: inverse"))?;
            for y in &g.elements {
                ensure(g.contains(&x.compose(y)), format!("{fam}: closure"))?;
            }
        }
        ensure(g.contains(&SignedPerm::negation(b.len())), format!("{fam}: -1 is perfect"))?;
    }
    for fam in ["G(1)", "P(1)"] {
        let b = block(fam)?;
        ensure(same_elements(&perf_enumerate(&b).map_err(err)?.group, &perf_exhaustive(&b).map_err(err)?), format!("{fam}: oracle"))?;
    }
    for cond in [4u32, 8, 12, 24] {
        let r = picard::cyclo::ring(cond);
        for seed in 0..200i64 {
            let coords: Vec<i64> = (0..r.phi() as i64).map(|i| ((seed * 7 + i * 13) % 9 - 4) * (1 << (seed % 3))).collect();
            let x = CycNum::from_int_coords(cond, &coords);
            for g in (1..cond as i64).filter(|g| num_integer::gcd(*g, cond as i64) == 1) {
                for m in 0..3 {
                    ensure(in_2m_o(&x, m) == in_2m_o(&x.galois(g), m), format!("Galois instability at {cond}"))?;
                }
            }
        }
    }
    let a = render(&cmd_verify("thm-main-ii,n1=1,n2=1", 2, 4).map_err(err)?, Format::Json).map_err(err)?;
    let b = render(&cmd_verify("thm-main-ii,n1=1,n2=1", 2, 4).map_err(err)?, Format::Json).map_err(err)?;
    let c = render(&cmd_perf("G(1)").map_err(err)?, Format::Text).map_err(err)?;
    let d = render(&cmd_perf("G(1)").map_err(err)?, Format::Text).map_err(err)?;
    ensure(a == b && c == d, "reports differ between runs")?;
    Ok("orthogonality, group axioms, oracle equivalence, Galois stability, determinism".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("perfect self-isometries of OA4", criterion_1),
        ("perfect self-isometries of OP", criterion_2),
        ("factorization over P x A4", criterion_3),
        ("root-sum dichotomy", criterion_4),
        ("pairing identities for G_n x A5", criterion_5),
        ("Picard group realizations", criterion_6),
        ("matrix-group normalizers", criterion_7),
        ("Out(G) versus N(E)/E", criterion_8),
        ("Aut(SL2(8)) ingredients", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, msg) = match f() {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!("criterion {:>2} {tag} [{:>7.2}s] {name}: {msg}", i + 1, start.elapsed().as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
