use mhyperg::rational::qr;
use mhyperg::series::{exp_kernel, pfq, pfq_two, HyperParams, Truncation};
use mhyperg::Alpha;

fn main() -> mhyperg::Result<()> {
    let alpha = Alpha::int(2);
    let x = [0.2, -0.1, 0.15];
    let tr = Truncation { max_degree: 30, n: x.len() };

    let e = pfq(&HyperParams::new(vec![], vec![], alpha.clone()), &x, &tr)?;
    println!("0F0(x) = {:.15}  exp(sum x) = {:.15}  tail {:.1e}", e.value, x.iter().sum::<f64>().exp(), e.tail);

    let a = qr(3, 2);
    let b = pfq(&HyperParams::new(vec![a.clone()], vec![], alpha.clone()), &x, &tr)?;
    let closed: f64 = x.iter().map(|xi| (1.0 - xi).powf(-1.5)).product();
    println!("1F0(3/2; x) = {:.15}  prod (1-x)^-a = {:.15}", b.value, closed);

    let h = HyperParams::new(vec![qr(1, 2), qr(1, 3)], vec![qr(7, 4)], alpha.clone());
    let v = pfq(&h, &x, &tr)?;
    println!("{} at x = {:.12} ({} degrees)", h.label(), v.value, v.degrees_used);

    let y = [0.5, 0.25, -0.3];
    let two = pfq_two(&h, &x, &y, &tr)?;
    println!("two-argument {}(x, y) = {:.12}", h.label(), two.value);
    println!("kernel 0F0(x, y) = {:.12}", exp_kernel(&x, &y, &alpha, &tr)?.value);
    Ok(())
}
