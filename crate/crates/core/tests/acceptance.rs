//! Runs every acceptance criterion and prints one line per criterion.

fn main() {
    let results = locsparse::acceptance::run_all();
    for r in &results {
        println!("{}", r.line());
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
