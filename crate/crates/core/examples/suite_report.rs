use mhyperg::suite::{run_suite, Format, SuiteConfig, SuiteName};
use mhyperg::Alpha;

fn main() -> mhyperg::Result<()> {
    let mut cfg = SuiteConfig::new(SuiteName::ExactIdentities);
    cfg.alphas = vec![Alpha::int(1), Alpha::int(2)];
    cfg.ns = vec![2];
    cfg.max_degree = 4;
    let report = run_suite(&cfg)?;
    println!("{} pass, {} fail, {} evidence", report.summary.pass, report.summary.fail, report.summary.evidence);
    for row in report.rows.iter().take(6) {
        println!("  {:<16} {:<40} {}", row.check, row.params, row.residual);
    }
    let csv = report.render(Format::Csv)?;
    println!("\nCSV head:\n{}", csv.lines().take(6).collect::<Vec<_>>().join("\n"));
    std::process::exit(report.exit_code());
}
