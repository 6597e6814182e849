//! Acceptance suite: one test per criterion, each printing a single
//! `PASS`/`FAIL` line to stderr (uncaptured) before asserting.

use std::io::Write;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use springer_core::frame::ToricFrame;
use springer_core::inversions::springer_inversions;
use springer_core::partition::{partitions_of, Partition};
use springer_core::poincare::{
    char_divisor, equivariant_poincare, extended_poincare, isotypic_poincare, springer_poincare,
};
use springer_core::tableau::{enumerate_rst, RowStrictTableau};
use springer_core::toric::{
    d_star, invariant_sum_decomposition, is_invariant_monomial, mu_coefficients, v_exponents,
    CTuple, ExponentVector,
};
use springer_core::verify::{
    check_char_divisor_lemma, check_extended_cells, check_invariant_monomials,
    check_poincare_identities, check_tableau_identities, orbit_oracle, orbit_sweep,
    VerificationReport,
};
use springer_core::IntPolynomial;

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{status} criterion {id:>2}: {name}{detail}");
}

fn conclude(id: u32, name: &str, failures: Vec<String>, elapsed: Duration) {
    let detail = if failures.is_empty() {
        format!(" ({} ms)", elapsed.as_millis())
    } else {
        format!(" :: {}", failures.join("; "))
    };
    report(id, name, failures.is_empty(), &detail);
    assert!(failures.is_empty(), "criterion {id} failed: {failures:?}");
}

fn expect<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        failures.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn expect_report(failures: &mut Vec<String>, r: &VerificationReport) {
    if !r.pass {
        failures.push(format!(
            "{} [{}] counterexample {}",
            r.check,
            r.range,
            r.counterexample.as_ref().map_or("null".into(), |v| v.to_string())
        ));
    }
}

fn example_tableau() -> RowStrictTableau {
    "3,4,5,6/1,2,9,10/7,8/11,12".parse().unwrap()
}

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn poly(c: &[u64]) -> IntPolynomial {
    IntPolynomial::new(c.to_vec())
}

#[test]
fn criterion_01_example_tableau() {
    let mut f = Vec::new();
    let start = Instant::now();
    let sigma = example_tableau();
    let dec = sigma.ijk_decomposition();
    let inv = springer_inversions(&sigma);
    let d = sigma.max_divisor();
    let q = sigma.quotient(d).unwrap();
    let elapsed = start.elapsed();

    expect(&mut f, "shape", sigma.shape().parts().to_vec(), vec![4, 4, 2, 2]);
    expect(&mut f, "I", dec.i, vec![8]);
    expect(&mut f, "J", dec.j, vec![1, 3, 4, 5, 7, 9, 11]);
    expect(&mut f, "K", dec.k, vec![2, 6, 10]);
    let mut want = vec![
        (12, 8), (12, 10), (12, 6), (11, 8), (11, 10), (11, 6), (10, 6),
        (9, 6), (8, 2), (8, 6), (7, 2), (7, 6), (3, 2),
    ];
    want.sort_unstable_by(|a, b| b.cmp(a));
    expect(&mut f, "inversions", inv.pairs, want);
    expect(&mut f, "d_sigma", d, 2);
    expect(&mut f, "quotient rows", q.rows().to_vec(), vec![vec![2, 3], vec![1, 5], vec![4], vec![6]]);
    if elapsed >= Duration::from_millis(1) {
        f.push(format!("runtime {elapsed:?} >= 1 ms"));
    }
    conclude(1, "example tableau: I/J/K, inversions, d_sigma, quotient", f, elapsed);
}

#[test]
fn criterion_02_w_sigma_inverse() {
    let mut f = Vec::new();
    let start = Instant::now();
    let w = example_tableau().w_sigma_inverse();
    expect(&mut f, "w_sigma^-1", w, vec![11, 7, 1, 3, 12, 8, 2, 4, 9, 5, 6, 10]);
    conclude(2, "w_sigma^-1 of the example tableau", f, start.elapsed());
}

#[test]
fn criterion_03_tableau_identities() {
    let mut f = Vec::new();
    let start = Instant::now();
    expect_report(&mut f, &check_tableau_identities(8));
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        f.push(format!("runtime {elapsed:?} >= 60 s"));
    }
    conclude(3, "pairs/inversions/quotient/divisor identities, n <= 8", f, elapsed);
}

#[test]
fn criterion_04_poincare_identities() {
    let mut f = Vec::new();
    let start = Instant::now();
    expect_report(&mut f, &check_poincare_identities(8));

    let p = |parts: &[usize]| springer_poincare(&shape(parts));
    let ext = extended_poincare(&shape(&[6, 6]));
    let rhs = p(&[6, 6])
        + p(&[3, 3]).shift(3)
        + p(&[2, 2]).shift(4).scale(&2)
        + p(&[1, 1]).shift(5).scale(&2);
    expect(&mut f, "P(ext Sp_[6,6])", ext, rhs);
    expect(
        &mut f,
        "P_chi4(Sp_[6,6])",
        isotypic_poincare(&shape(&[6, 6]), 4).unwrap(),
        p(&[2, 2]).shift(4),
    );
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        f.push(format!("runtime {elapsed:?} >= 60 s"));
    }
    conclude(4, "Poincare identities, n <= 8, all characters", f, elapsed);
}

#[test]
fn criterion_05_v_table() {
    let mut f = Vec::new();
    let start = Instant::now();
    // exponents of z_1..z_11 in v_1..v_11 for n = 12, as displayed
    let table: [[u64; 11]; 11] = [
        [11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1],
        [10, 8, 6, 4, 2, 0, 10, 8, 6, 4, 2],
        [9, 6, 3, 0, 9, 6, 3, 0, 9, 6, 3],
        [8, 4, 0, 8, 4, 0, 8, 4, 0, 8, 4],
        [7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5],
        [6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6],
        [5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7],
        [4, 8, 0, 4, 8, 0, 4, 8, 0, 4, 8],
        [3, 6, 9, 0, 3, 6, 9, 0, 3, 6, 9],
        [2, 4, 6, 8, 10, 0, 2, 4, 6, 8, 10],
        [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
    ];
    for (k, row) in table.iter().enumerate() {
        let k = k as u64 + 1;
        expect(&mut f, &format!("v_{k}"), v_exponents(12, k).unwrap().exps, row.to_vec());
    }
    let mu4: Vec<Ratio<u64>> = [2, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1]
        .iter()
        .map(|&x| Ratio::new(x, 3))
        .collect();
    expect(&mut f, "mu_4", mu_coefficients(12, 4).unwrap(), mu4);
    conclude(5, "v-exponent table for n = 12 and mu_4", f, start.elapsed());
}

#[test]
fn criterion_06_orbits() {
    let mut f = Vec::new();
    let start = Instant::now();
    let remark = ToricFrame::new(4, vec![], vec![1, 3], vec![2]).unwrap();
    expect(&mut f, "components for n=4, J={1,3}, K={2}", d_star(&remark), 2);
    expect_report(&mut f, &orbit_oracle(&remark));
    expect_report(&mut f, &orbit_sweep(5));
    let sweep6: Vec<VerificationReport> = ToricFrame::all(6).iter().map(orbit_oracle).collect();
    expect(&mut f, "n = 6 frames swept", sweep6.len(), 243);
    for r in &sweep6 {
        expect_report(&mut f, r);
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(300) {
        f.push(format!("runtime {elapsed:?} >= 5 min"));
    }
    conclude(6, "H-orbits = phi-fibers, count = d*, shift r -> r+1; n <= 6", f, elapsed);
}

#[test]
fn criterion_07_invariant_monomials() {
    let mut f = Vec::new();
    let start = Instant::now();
    expect_report(&mut f, &check_invariant_monomials(6));

    let fz = ExponentVector::new(6, vec![1, 2, 3, 1, 5]).unwrap();
    expect(&mut f, "f invariant under H_{4}", is_invariant_monomial(&fz, &[4]), true);
    expect(&mut f, "f not invariant under H", is_invariant_monomial(&fz, &[]), false);
    let dec = invariant_sum_decomposition(&fz, &CTuple::new(vec![4], vec![0]).unwrap()).unwrap();
    expect(&mut f, "m_4", dec.m, vec![3]);
    expect(&mut f, "g", dec.g.exps, vec![1, 2, 3, 4, 5]);
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(120) {
        f.push(format!("runtime {elapsed:?} >= 2 min"));
    }
    conclude(7, "invariant monomials and sum decomposition, n <= 6", f, elapsed);
}

#[test]
fn criterion_08_degenerate_shapes() {
    let mut f = Vec::new();
    let start = Instant::now();
    for n in 1..=8usize {
        let row = Partition::row(n);
        expect(&mut f, &format!("extended [{n}]"), extended_poincare(&row), poly(&[n as u64]));
        let eq = equivariant_poincare(&row);
        expect(&mut f, &format!("characters of [{n}]"), eq.by_char.clone(), vec![IntPolynomial::one(); n]);

        let col = Partition::column(n);
        expect(
            &mut f,
            &format!("extended [1^{n}]"),
            extended_poincare(&col),
            springer_poincare(&col),
        );
        if !enumerate_rst(&col).all(|s| s.max_divisor() == 1) {
            f.push(format!("[1^{n}] has a tableau with d_sigma > 1"));
        }

        for lam in partitions_of(n) {
            let p = springer_poincare(&lam);
            expect(&mut f, &format!("degree {lam}"), p.degree(), Some(lam.springer_dim() as usize));
            expect(&mut f, &format!("leading {lam}"), p.leading_coeff().copied(), Some(lam.hook_length_count()));
        }
    }
    conclude(8, "one-row and one-column shapes, degree and leading coefficient", f, start.elapsed());
}

#[test]
fn criterion_09_char_divisor_lemma() {
    let mut f = Vec::new();
    let start = Instant::now();
    expect_report(&mut f, &check_char_divisor_lemma(24));
    expect(&mut f, "char_divisor(12,4)", char_divisor(12, 4).unwrap(), 3);
    conclude(9, "divisibility predicate identity, n <= 24", f, start.elapsed());
}

#[test]
fn criterion_10_extended_cells() {
    let mut f = Vec::new();
    let start = Instant::now();
    expect_report(&mut f, &check_extended_cells(8));
    conclude(10, "extended cells match the extended polynomial and cyclic action, n <= 8", f, start.elapsed());
}
