use mhyperg::identities::{identity_check, Instance};
use mhyperg::rational::{q, qr};
use mhyperg::Alpha;

fn main() -> mhyperg::Result<()> {
    let (n, d) = (2, 5);
    for alpha in [Alpha::ratio(1, 2), Alpha::int(2)] {
        let two_f_one = Instance::new(vec![qr(1, 3), qr(2, 5)], vec![qr(11, 7)], alpha.clone());
        let one_f_one = Instance::new(vec![qr(3, 4)], vec![qr(9, 5)], alpha.clone());
        for (name, inst) in [("euler", &two_f_one), ("kummer", &one_f_one), ("duality", &two_f_one), ("kernel_deriv", &two_f_one)] {
            let r = identity_check(name, inst, d, n)?;
            println!("{:<13} {:<34} residual {:<6} {:?}", r.name, r.instance, r.max_residual.to_string(), r.status);
        }
        // balanced: d = a + b - c - N + p, terminating at N = 2
        let sa = Instance::new(vec![qr(1, 3), qr(5, 7), q(-2)], vec![qr(3, 2)], alpha.clone());
        let r = identity_check("saalschutz", &sa, d, n)?;
        println!("{:<13} {:<34} residual {:<6} {:?}", r.name, r.instance, r.max_residual.to_string(), r.status);
    }

    let g = Instance::new(vec![qr(1, 4), qr(1, 3)], vec![q(4)], Alpha::int(1));
    let r = identity_check("gauss", &g, 40, n)?;
    println!("gauss (non-terminating, D=40): {} {:?} {}", r.max_residual, r.status, r.detail);
    Ok(())
}
