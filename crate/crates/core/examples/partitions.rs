use mhyperg::partition::{gen_pochhammer, hook_products, partitions, rho};
use mhyperg::rational::{fmt_q, qr};
use mhyperg::{Alpha, Partition};

fn main() -> mhyperg::Result<()> {
    let alpha = Alpha::ratio(3, 2);
    let lam = Partition::parse("3,2,1")?;
    println!("lambda = {lam}, conjugate = {}, |lambda| = {}", lam.conjugate(), lam.size());

    // hooks drive every normalization constant downstream
    let (lower, upper) = hook_products(&lam, &alpha)?;
    println!("hooks at alpha={alpha}: lower {}  upper {}", fmt_q(&lower), fmt_q(&upper));
    println!("rho = {}", fmt_q(&rho(&lam, &alpha)?));
    println!("(1/2)_lambda = {}", fmt_q(&gen_pochhammer(&qr(1, 2), &lam, &alpha)));

    for m in 1..=6 {
        let ps = partitions(m, 3);
        let shown: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        println!("m={m} ({} with <=3 rows): {}", ps.len(), shown.join(" "));
    }
    let sub: Vec<String> = lam.subpartitions().iter().map(|p| p.to_string()).collect();
    println!("inside {lam}: {}", sub.join(" "));
    Ok(())
}
