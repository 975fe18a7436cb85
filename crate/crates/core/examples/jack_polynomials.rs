use mhyperg::jack::{binom, jack, jstar_at_ones, principal_spec, Norm};
use mhyperg::rational::fmt_q;
use mhyperg::symfun::MonomialExpansion;
use mhyperg::{Alpha, Partition};

fn show(name: &str, f: &MonomialExpansion) {
    let terms: Vec<String> = f.coeffs().iter().map(|(mu, c)| format!("{} m{mu}", fmt_q(c))).collect();
    println!("{name} = {}", terms.join(" + "));
}

fn main() -> mhyperg::Result<()> {
    let lam = Partition::parse("2,1")?;
    let n = 3;
    for alpha in [Alpha::int(1), Alpha::int(2), Alpha::ratio(1, 2)] {
        println!("alpha = {alpha}");
        for norm in [Norm::P, Norm::J, Norm::C] {
            show(&format!("  {norm:?}{lam}"), &jack(&lam, &alpha, n, norm)?);
        }
        println!("  J*(1_n) = {}", fmt_q(&jstar_at_ones(&lam, &alpha, n)?));
        println!("  J with p_r -> 1/3 for all r: {}", fmt_q(&principal_spec(&lam, &alpha, &mhyperg::rational::qr(1, 3))?));
    }

    // C-normalized terms over lambda |- m sum to p1^m
    let alpha = Alpha::int(3);
    let mut total = MonomialExpansion::zero(n);
    for l in mhyperg::partition::partitions(3, n) {
        total = total.add(&jack(&l, &alpha, n, Norm::C)?);
    }
    show("sum C_lambda, |lambda|=3", &total);

    let big = Partition::parse("3,1")?;
    for mu in big.subpartitions() {
        println!("binom[{big} ; {mu}] = {}", fmt_q(&binom(&big, &mu, &alpha)?));
    }
    Ok(())
}
