use mhyperg::ortho::{hermite, jacobi, jacobi_c, laguerre, OmegaExpansion};
use mhyperg::rational::{fmt_q, qr};
use mhyperg::{Alpha, Partition};

fn dump(name: &str, f: &OmegaExpansion) {
    println!("{name}:");
    for (mu, c) in f.table() {
        println!("  {mu:<8} {c}");
    }
}

fn main() -> mhyperg::Result<()> {
    let alpha = Alpha::int(2);
    let n = 2;
    let lam = Partition::parse("2,1")?;
    let a = qr(1, 2);
    let b = qr(3, 2);

    dump(&format!("L^{}_{lam}", fmt_q(&a)), &laguerre(&lam, &a, &alpha, n)?);
    dump(&format!("H_{lam}"), &hermite(&lam, &alpha, n)?);
    let g = jacobi(&lam, &a, &b, &alpha, n)?;
    dump(&format!("G^({},{})_{lam}", fmt_q(&a), fmt_q(&b)), &g);
    println!("G at (0.3, 0.6) = {:.12}", g.eval(&[0.3, 0.6])?);

    let c = qr(5, 3);
    for mu in lam.subpartitions() {
        println!("c_{lam},{mu}(c={}) = {}", fmt_q(&c), fmt_q(&jacobi_c(&lam, &mu, &c, &alpha)?));
    }
    Ok(())
}
