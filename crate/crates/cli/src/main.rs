use std::io::Write;
use std::time::Instant;

fn main() {
    let start = Instant::now();
    let out = lipmod::run(std::env::args());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(lipmod::render(&out).as_bytes());
    let _ = stdout.flush();
    // timing stays out of the report so that reports are reproducible byte for byte
    if out.raw.is_none() {
        eprintln!("elapsed_ms: {:.3}", start.elapsed().as_secs_f64() * 1e3);
    }
    std::process::exit(out.exit);
}
