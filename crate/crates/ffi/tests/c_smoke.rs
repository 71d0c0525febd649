//! Compiles a C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "isocx.h"

int main(void) {
    size_t ranks[3];
    if (isocx_closed_point_ranks(2, 2, ranks, 3) != ISOCX_STATUS_OK) return 1;
    if (ranks[0] != 0 || ranks[1] != 0 || ranks[2] != 2) return 2;
    bool member = false;
    if (isocx_ideal_membership(2, 2, &member) != ISOCX_STATUS_OK || !member) return 3;
    IsocxConfig *cfg = isocx_config_new();
    uint32_t bad[1] = {4};
    isocx_config_set_primes(cfg, bad, 1);
    if (isocx_config_validate(cfg) != ISOCX_STATUS_NOT_PRIME) return 4;
    if (isocx_last_error_message() == NULL) return 5;
    isocx_config_free(cfg);
    printf("ok\n");
    return 0;
}
"#;

fn staticlib() -> Option<PathBuf> {
    // target/<profile>/deps/<test> → target/<profile>/libisocx_ffi.a
    let exe = std::env::current_exe().ok()?;
    let dir = exe.parent()?.parent()?;
    let lib = dir.join("libisocx_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let lib = staticlib().expect("static library next to the test binary");
    let tmp = std::env::temp_dir().join(format!("isocx_c_smoke_{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let src = tmp.join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let exe = tmp.join("main");
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-I", include])
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
    std::fs::remove_dir_all(&tmp).ok();
}
