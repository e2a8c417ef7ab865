//! Drives the command-line dispatcher in-process, as a script would.
//!
//! cargo run --example cli_session

use sparse_halves::cli::dispatch;

fn main() {
    let runs: &[&[&str]] = &[
        &["construct", "F(2,2)x2", "--arrangement"],
        &["density", "F(2,2)x2", "--alpha", "1/2", "--beta", "1/50"],
        &["hom", "C(7)", "F(2,2)"],
        &["beta-table", "--spec", "K(5,5)", "F(2,2)x2", "--alpha", "3/5", "7/10"],
        &["verify", "--part", "iii", "--spec", "F(3,2)x2", "--samples", "3", "--seed", "9"],
    ];
    for args in runs {
        println!("$ sparse-halves {}", args.join(" "));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = dispatch(std::iter::once("sparse-halves").chain(args.iter().copied()), &mut out, &mut err);
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        println!("(exit {code})\n");
    }
}
