//! Drive the command line in-process on a batch file of JSON diagrams.

use std::io::Write;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = tempfile_path("batch.json");
    let batch = r#"[
  {"label": "trefoil", "pd": [[1,4,2,5],[3,6,4,1],[5,2,6,3]]},
  {"label": "curl", "pd": [[1,2,2,1]]},
  {"label": "unknot", "pd": [], "components": 1}
]"#;
    std::fs::File::create(&file)?.write_all(batch.as_bytes())?;

    for args in [
        vec!["adequacy", "--format", "csv"],
        vec!["jones", "-n", "3", "--format", "csv"],
        vec!["verify", "--strict", "--format", "csv"],
    ] {
        let mut argv = vec!["jones-slopes".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        argv.extend(["--file".to_string(), file.display().to_string()]);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = jones_slopes::cli::run(&argv, &mut out, &mut err);
        println!("$ {}  -> exit {code}", args.join(" "));
        print!("{}", String::from_utf8(out)?);
    }
    std::fs::remove_file(&file)?;
    Ok(())
}

fn tempfile_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("jones-slopes-{}-{name}", std::process::id()))
}
