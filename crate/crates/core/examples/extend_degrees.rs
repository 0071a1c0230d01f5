//! Run the extension sweep and print the fixture it would store.

use cr_sphere::report::cmd_extend;

fn main() -> cr_sphere::Result<()> {
    let l: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let (report, fixture) = cmd_extend(l)?;
    print!("{}", report.render_table());
    println!(
        "{}",
        serde_json::to_string_pretty(&fixture).expect("fixture serializes")
    );
    Ok(())
}
