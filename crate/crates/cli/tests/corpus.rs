use std::path::PathBuf;

use yblie_cli::bundled::{generate, FILES};
use yblie_cli::commands::verify_text;
use yblie_cli::Manifest;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Set `YBLIE_WRITE_CORPUS=1` to rewrite the files after changing the generator.
#[test]
fn corpus_files_are_current() {
    let write = std::env::var_os("YBLIE_WRITE_CORPUS").is_some();
    let generated = generate();
    let names: Vec<&str> = generated.iter().map(|(f, _)| *f).collect();
    let bundled: Vec<&str> = FILES.iter().map(|(f, _)| *f).collect();
    assert_eq!(names, bundled);
    for (file, manifest) in generated {
        let path = corpus_dir().join(file);
        let text = manifest.to_json();
        if write {
            std::fs::write(&path, &text).unwrap();
        } else {
            let on_disk = std::fs::read_to_string(&path).unwrap();
            assert!(on_disk == text, "{file} is stale; rerun with YBLIE_WRITE_CORPUS=1");
        }
    }
}

#[test]
fn bundled_files_round_trip() {
    for (file, text) in FILES {
        let m = Manifest::parse(text).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_eq!(&m.to_json(), text, "{file}");
    }
}

#[test]
fn bundled_files_verify() {
    for (file, text) in FILES {
        let v = verify_text(file, text);
        assert!(v.ok(), "{v:#?}");
    }
}
