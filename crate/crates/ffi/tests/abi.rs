use std::ffi::CStr;
use std::process::Command;
use std::ptr;

use bcells_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(bc_last_error()) }.to_string_lossy().into_owned()
}

fn take(status: BcStatus, p: *mut BcPartition) -> Vec<u32> {
    unsafe {
        assert_eq!(status, BcStatus::Ok, "{}", last_error());
        let mut labels = vec![0u32; bc_partition_len(p)];
        assert_eq!(bc_partition_labels(p, labels.as_mut_ptr(), labels.len()), BcStatus::Ok);
        bc_partition_free(p);
        labels
    }
}

#[test]
fn vogan_classes_match_left_cells_rank_three() {
    unsafe {
        for b in [2, 3] {
            let mut v = ptr::null_mut();
            let s = bc_vogan_classes(3, 1, b, &mut v);
            assert_eq!(bc_partition_num_classes(v), if b == 3 { 20 } else { 16 });
            let vogan = take(s, v);
            let mut c = ptr::null_mut();
            let cells = take(bc_left_cells(3, 1, b, 4, &mut c), c);
            assert_eq!(vogan, cells);
        }
    }
}

#[test]
fn orbit_count_rank_three() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(bc_xi_orbits(3, 1, 3, &mut p), BcStatus::Ok);
        assert_eq!(bc_partition_num_classes(p), 26);
        let mut label = u32::MAX;
        assert_eq!(bc_partition_class_of(p, 0, &mut label), BcStatus::Ok);
        assert_eq!(label, 0);
        assert_eq!(bc_partition_class_of(p, 48, &mut label), BcStatus::InvalidInput);
        bc_partition_free(p);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(bc_vogan_classes(4, 1, 2, &mut p), BcStatus::Regime);
        assert!(!last_error().is_empty());
        assert!(p.is_null());
        assert_eq!(bc_left_cells(6, 1, 6, 5, &mut p), BcStatus::Budget);
        assert_eq!(bc_vogan_classes(3, 0, 3, &mut p), BcStatus::InvalidInput);
        assert_eq!(bc_vogan_classes(3, 1, 3, ptr::null_mut()), BcStatus::NullPointer);
        assert_eq!(bc_partition_len(ptr::null()), 0);
        bc_partition_free(ptr::null_mut());
        let mut small = [0u32; 2];
        let mut q = ptr::null_mut();
        assert_eq!(bc_vogan_classes(2, 1, 2, &mut q), BcStatus::Ok);
        assert!(last_error().is_empty());
        assert_eq!(bc_partition_labels(q, small.as_mut_ptr(), 2), BcStatus::BufferTooSmall);
        bc_partition_free(q);
    }
}

#[test]
fn element_round_trip() {
    unsafe {
        let window: [i8; 4] = [-3, 1, 4, -2];
        let mut idx = 0usize;
        assert_eq!(bc_element_index(window.as_ptr(), 4, &mut idx), BcStatus::Ok);
        let mut back = [0i8; 4];
        assert_eq!(bc_element_window(4, idx, back.as_mut_ptr(), 4), BcStatus::Ok);
        assert_eq!(back, window);
        let bad: [i8; 3] = [1, 1, 2];
        assert_eq!(bc_element_index(bad.as_ptr(), 3, &mut idx), BcStatus::InvalidInput);
        assert_eq!(bc_element_window(3, 48, back.as_mut_ptr(), 4), BcStatus::InvalidInput);
    }
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(bc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/bcells.h");
    let src = std::env::temp_dir().join(format!("bcells_header_{}.c", std::process::id()));
    std::fs::write(&src, format!("#include \"{header}\"\nint main(void) {{ BcPartition *p = 0; bc_partition_free(p); return BC_STATUS_OK; }}\n")).unwrap();
    let status = match Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"]).arg(&src).status() {
        Ok(s) => s,
        Err(_) => {
            eprintln!("no C compiler; header syntax not checked");
            return;
        }
    };
    std::fs::remove_file(&src).ok();
    assert!(status.success());
}
