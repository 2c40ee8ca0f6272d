//! Running the full verification suite and rendering its report.

use vmrt::varieties::resolve;
use vmrt::verify::{run, VerifyOptions};

pub fn run_example() -> vmrt::Result<()> {
    let options = VerifyOptions {
        samples: 10,
        ..VerifyOptions::default()
    };
    let report = run(&resolve("builtin:veronese-2-3")?, &options)?;
    print!("{}", report.to_text());

    let failing = run(&resolve("builtin:adversarial-cubic")?, &options)?;
    let iso = failing.check("isotropy").expect("isotropy ran");
    println!("adversarial-cubic isotropy witness: {}", iso.witness.as_ref().expect("witness"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> vmrt::Result<()> {
    run_example()
}
