//! Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

use daha::verify::{run, Settings};

fn main() {
    let seed = std::env::var("DAHA_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let only: Option<Vec<usize>> = std::env::var("DAHA_CRITERIA").ok().map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let mut failed = Vec::new();
    for id in 1..=11 {
        if only.as_ref().is_some_and(|o| !o.contains(&id)) {
            continue;
        }
        let c = run(id, &Settings::full(seed));
        println!("{}", c.line());
        for d in &c.detail {
            println!("      {}", d);
        }
        if !c.ok {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {:?}", failed);
        std::process::exit(1);
    }
}
