use mhyperg::mc::{laguerre_moment, orthogonality, selberg_kadell, Family};
use mhyperg::rational::qr;
use mhyperg::{Alpha, Partition};

// Small sample counts keep this quick; the suites run 10^6.
fn main() -> mhyperg::Result<()> {
    let samples = 50_000;
    let n = 2;
    for alpha in [Alpha::int(1), Alpha::int(2)] {
        for lam in ["1", "2", "1,1"] {
            let lam = Partition::parse(lam)?;
            for r in [selberg_kadell(&lam, 2.0, 3.0, &alpha, n, samples, 7)?, laguerre_moment(&lam, 2.5, &alpha, n, samples, 7)?] {
                println!("{:<16} {:<30} est {:>10.5} +- {:.5}  target {:>10.5}  {:.2} sigma  {:?}", r.check, r.params, r.estimate, r.stderr, r.target, r.sigmas, r.verdict);
            }
        }
    }
    let fam = Family::Laguerre { a: qr(1, 2) };
    let r = orthogonality(&fam, &Partition::parse("1")?, &Partition::parse("2")?, &Alpha::int(2), n, samples, 11)?;
    println!("{} {}: {:.5} +- {:.5} (target {})", r.check, r.params, r.estimate, r.stderr, r.target);
    Ok(())
}
