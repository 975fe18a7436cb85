use std::collections::BTreeMap;
use std::path::PathBuf;

use mhyperg::jack::{coefficient_table, jack_power, principal_spec, Norm};
use mhyperg::ortho::{hermite, jacobi_c};
use mhyperg::partition::{gen_pochhammer, hook_products, partitions, rho_skew};
use mhyperg::rational::{parse_q, q, qr, Q};
use mhyperg::series::{pfq, HyperParams, Truncation};
use mhyperg::suite::{build_table, TableKind, TableParams};
use mhyperg::symfun::{inner_product, m_to_p, omega_alpha, MonomialExpansion, PowerSumElement};
use mhyperg::{Alpha, Partition};
use num::{One, Zero};

type Fixture = BTreeMap<String, BTreeMap<String, String>>;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/test-data").join(name)
}

const FIXTURES: [(&str, (i64, i64)); 3] = [("jack_p_alpha_1_2.json", (1, 2)), ("jack_p_alpha_1.json", (1, 1)), ("jack_p_alpha_2.json", (2, 1))];

/// Reads a fixture; with MHYPERG_BLESS set, rewrites it from the current engine first.
fn load(name: &str, alpha: &Alpha) -> Fixture {
    let path = data(name);
    if std::env::var_os("MHYPERG_BLESS").is_some() {
        let mut all = Fixture::new();
        for d in 0..=6 {
            all.extend(coefficient_table(d, alpha));
        }
        std::fs::write(&path, serde_json::to_string_pretty(&all).unwrap() + "\n").unwrap();
    }
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))).unwrap()
}

fn key(lam: &Partition) -> String {
    serde_json::to_string(lam).unwrap()
}

fn expansion(row: &BTreeMap<String, String>, n: usize) -> MonomialExpansion {
    let mut f = MonomialExpansion::zero(n);
    for (mu, c) in row {
        let parts: Vec<usize> = serde_json::from_str(mu).unwrap();
        f.add_term(Partition::new(parts).unwrap(), parse_q(c).unwrap());
    }
    f
}

// <f, g>_alpha = sum z_rho alpha^len(rho) f_rho g_rho, written out here rather than borrowed
fn pairing(f: &PowerSumElement, g: &PowerSumElement, alpha: &Q) -> Q {
    let mut s = Q::zero();
    for (rho, a) in f.coeffs() {
        let b = g.coeff(rho);
        if b.is_zero() {
            continue;
        }
        let mut w = Q::from_integer(rho.z());
        for _ in 0..rho.len() {
            w *= alpha;
        }
        s += w * a * b;
    }
    s
}

fn ssyt_count(shape: &Partition, content: &Partition) -> i64 {
    // fill rows left to right with weakly increasing rows, strictly increasing columns
    fn go(cells: &[(usize, usize)], idx: usize, grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> i64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 || (j > 0 && grid[i][j - 1] > v) || (i > 0 && grid[i - 1][j] >= v) {
                continue;
            }
            left[v] -= 1;
            grid[i][j] = v;
            total += go(cells, idx + 1, grid, left);
            left[v] += 1;
        }
        total
    }
    let rows = shape.parts();
    let cells: Vec<(usize, usize)> = rows.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut left = content.parts().to_vec();
    go(&cells, 0, &mut grid, &mut left)
}

#[test]
fn fixtures_match_engine() {
    for (name, (a, b)) in FIXTURES {
        let alpha = Alpha::ratio(a, b);
        let fx = load(name, &alpha);
        let mut live = Fixture::new();
        for d in 0..=6 {
            live.extend(coefficient_table(d, &alpha));
        }
        assert_eq!(fx, live, "{name} drifted from the engine");
        assert_eq!(fx.len(), (0..=6).map(|d| partitions(d, d).len()).sum::<usize>());
    }
}

#[test]
fn schur_fixture_is_kostka() {
    let fx = load("jack_p_alpha_1.json", &Alpha::int(1));
    for d in 1..=6 {
        for lam in partitions(d, d) {
            let row = &fx[&key(&lam)];
            for mu in partitions(d, d) {
                let got = row.get(&key(&mu)).map(|s| parse_q(s).unwrap()).unwrap_or_else(Q::zero);
                assert_eq!(got, q(ssyt_count(&lam, &mu)), "K[{lam}, {mu}]");
            }
        }
    }
}

#[test]
fn fixtures_are_monic_triangular_and_orthogonal() {
    for (name, (a, b)) in FIXTURES {
        let alpha = Alpha::ratio(a, b);
        let aq = qr(a, b);
        let fx = load(name, &alpha);
        for d in 1..=6 {
            let ps: Vec<Partition> = partitions(d, d);
            let mut in_p = Vec::new();
            for lam in &ps {
                let row = &fx[&key(lam)];
                assert_eq!(row.get(&key(lam)).map(String::as_str), Some("1"), "{name}: P{lam} not monic");
                for mu in row.keys() {
                    let mu = Partition::new(serde_json::from_str(mu).unwrap()).unwrap();
                    assert!(lam.dominates(&mu), "{name}: m{mu} appears in P{lam}");
                }
                in_p.push(m_to_p(&expansion(row, d)));
            }
            for i in 0..ps.len() {
                for j in 0..i {
                    assert!(pairing(&in_p[i], &in_p[j], &aq).is_zero(), "{name}: <P{}, P{}> != 0", ps[i], ps[j]);
                }
            }
        }
    }
}

#[test]
fn hook_products_of_a_row() {
    let (h, hp) = hook_products(&Partition::row(2), &Alpha::int(2)).unwrap();
    assert_eq!((h.clone(), hp.clone()), (q(3), q(8)));
    // equals the ordinary hook product of (4)
    assert_eq!(h * hp, q(24));
}

#[test]
fn pochhammer_of_21_at_alpha_2() {
    let a = qr(3, 7);
    let want = a.clone() * (&a + q(1)) * (&a - qr(1, 2));
    assert_eq!(gen_pochhammer(&a, &Partition::parse("2,1").unwrap(), &Alpha::int(2)), want);
    let a11 = gen_pochhammer(&a, &Partition::parse("1,1").unwrap(), &Alpha::int(3));
    assert_eq!(a11, a.clone() * (&a - qr(1, 3)));
}

#[test]
fn content_of_a_single_box() {
    let r = rho_skew(&Partition::parse("1,1").unwrap(), &Partition::row(1), &Alpha::int(2)).unwrap();
    assert_eq!(r, qr(-1, 2));
}

#[test]
fn p1_power_norm_at_alpha_2() {
    for m in 0..=6usize {
        let f = PowerSumElement::p(1).pow(m);
        let fact: Q = (1..=m).fold(Q::one(), |acc, i| acc * q(i as i64));
        assert_eq!(inner_product(&f, &f, &Alpha::int(2)).unwrap(), q(1 << m) * fact);
    }
}

#[test]
fn omega_sends_p_to_dual_q() {
    for alpha in [Alpha::int(2), Alpha::ratio(1, 3), Alpha::ratio(5, 2)] {
        let dual = alpha.dual().unwrap();
        for lam in partitions(4, 4) {
            let lhs = omega_alpha(&jack_power(&lam, &alpha, 4, Norm::P).unwrap(), &alpha).unwrap();
            let rhs = jack_power(&lam.conjugate(), &dual, 4, Norm::Q).unwrap();
            assert!(lhs.sub(&rhs).is_zero(), "alpha={alpha} lambda={lam}");
        }
    }
}

#[test]
fn principal_specialization_of_a_row() {
    for x in [q(1), q(3), qr(-2, 5), qr(7, 3)] {
        assert_eq!(principal_spec(&Partition::row(2), &Alpha::int(2), &x).unwrap(), x.clone() * (&x + q(2)));
    }
}

#[test]
fn jacobi_c_diagonal_is_one() {
    for lam in mhyperg::partition::partitions_upto(4, 4) {
        assert_eq!(jacobi_c(&lam, &lam, &qr(5, 11), &Alpha::ratio(3, 2)).unwrap(), Q::one());
    }
}

#[test]
fn hermite_vanishes_at_origin_for_odd_weight() {
    for lam in ["1", "2,1", "3", "1,1,1"] {
        let lam = Partition::parse(lam).unwrap();
        let h = hermite(&lam, &Alpha::int(2), 3).unwrap();
        assert_eq!(h.eval(&[0.0, 0.0, 0.0]).unwrap(), 0.0, "H{lam}(0)");
    }
}

#[test]
fn bessel_type_series_is_cosh() {
    let tr = Truncation { max_degree: 40, n: 1 };
    for x in [0.1f64, 0.5, 1.2] {
        let v = pfq(&HyperParams::new(vec![], vec![qr(1, 2)], Alpha::int(2)), &[x * x], &tr).unwrap().value;
        assert!((v - (2.0 * x).cosh()).abs() < 1e-12, "x={x}: {v}");
    }
}

#[test]
fn table_rows_match_closed_forms() {
    let p = TableParams { alpha: Alpha::int(2), max_degree: 4, ..TableParams::default() };
    let c = build_table(TableKind::JackCoeffs, &p).unwrap();
    // C-normalized sums over each weight reproduce p1^m in monomials
    for m in 1..=4usize {
        let mut sum: BTreeMap<String, Q> = BTreeMap::new();
        for r in &c.rows {
            let lam = Partition::parse(r[0].trim_matches(|ch| ch == '(' || ch == ')')).unwrap_or_else(|_| Partition::empty());
            if lam.size() == m {
                *sum.entry(r[1].clone()).or_insert_with(Q::zero) += parse_q(&r[2]).unwrap();
            }
        }
        for mu in partitions(m, 4) {
            let mut want: Q = (1..=m).fold(Q::one(), |acc, i| acc * q(i as i64));
            for &r in mu.parts() {
                want /= (1..=r).fold(Q::one(), |acc, i| acc * q(i as i64));
            }
            assert_eq!(sum.get(&mu.to_string()).cloned().unwrap_or_else(Q::zero), want, "m={m} mu={mu}");
        }
    }
    let b = build_table(TableKind::Binomials, &p).unwrap();
    for r in b.rows.iter().filter(|r| r[0] == r[1]) {
        assert_eq!(r[2], "1");
    }
}
