use mhyperg::suite::{build_table, Format, TableKind, TableParams};
use mhyperg::Alpha;

fn main() -> mhyperg::Result<()> {
    let p = TableParams { alpha: Alpha::int(1), max_degree: 3, ..TableParams::default() };
    for kind in [TableKind::JackCoeffs, TableKind::Binomials, TableKind::JacobiC] {
        let t = build_table(kind, &p)?;
        println!("{}", t.render(Format::Csv)?);
    }
    let lag = build_table(TableKind::Laguerre, &TableParams { max_degree: 2, ..TableParams::default() })?;
    println!("{}", lag.render(Format::Json)?);
    Ok(())
}
