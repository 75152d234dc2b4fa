//! C ABI over `kedge-core`.
//!
//! Graphs and solve reports are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns a
//! [`KedgeStatus`]; on failure a message is available from
//! [`kedge_last_error`] until the next failing call on the same thread.
//! Panics never cross the boundary; they surface as `KEDGE_STATUS_PANIC`.
//! Constructors set `*out` to NULL before validating their input.
//!
//! Colours are `1..=k`; `0` in a colour buffer means "uncoloured". Buffers
//! are indexed by edge id, i.e. by position in the canonical edge order
//! reported by [`kedge_graph_edge`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use kedge_core::io::{read_graph, write_graph};
use kedge_core::{
    chromatic_index, solve, Colour, Graph, PartialEdgeColouring, Shortcut, SolveReport,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KedgeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph = 2,
    ParseError = 3,
    BufferTooSmall = 4,
    NoWitness = 5,
    Edgeless = 6,
    InvalidColouring = 7,
    OutOfRange = 8,
    Panic = 9,
}

/// How `kedge_solve` reached its decision.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KedgeShortcut {
    /// The semi-core was built and solved.
    None = 0,
    /// Δ < k: colourable without search.
    DeltaBelowK = 1,
    /// Δ > k: not colourable.
    DeltaAboveK = 2,
}

/// Plain-data summary of a solve. Counts that do not apply are `SIZE_MAX`
/// (or `UINT64_MAX` for `search_nodes`).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KedgeReportInfo {
    pub k: usize,
    pub colourable: bool,
    pub delta: usize,
    pub core_size: usize,
    pub semi_core_size: usize,
    pub semi_core_edges: usize,
    pub shortcut: KedgeShortcut,
    pub search_nodes: u64,
    pub decompose_ns: u64,
    pub semicore_ns: u64,
    pub extend_ns: u64,
    pub total_ns: u64,
}

/// Opaque graph handle.
pub struct KedgeGraph {
    inner: Graph,
}

/// Opaque solve report handle.
pub struct KedgeReport {
    inner: SolveReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    let c = CString::new(msg).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn fail(status: KedgeStatus, msg: impl Into<String>) -> KedgeStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into `KEDGE_STATUS_PANIC`.
fn guarded(f: impl FnOnce() -> KedgeStatus + UnwindSafe) -> KedgeStatus {
    match catch_unwind(f) {
        Ok(status) => status,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            fail(KedgeStatus::Panic, msg)
        }
    }
}

fn colours_out(c: &PartialEdgeColouring, out: *mut u32, len: usize) -> KedgeStatus {
    let m = c.assignment().len();
    if len < m {
        return fail(
            KedgeStatus::BufferTooSmall,
            format!("buffer holds {len} colours, need {m}"),
        );
    }
    if m == 0 {
        return KedgeStatus::Ok;
    }
    if out.is_null() {
        return fail(KedgeStatus::NullPointer, "colour buffer is NULL");
    }
    // SAFETY: caller guarantees `out` points to `len >= m` writable u32s.
    let buf = unsafe { std::slice::from_raw_parts_mut(out, m) };
    for (slot, col) in buf.iter_mut().zip(c.assignment()) {
        *slot = col.map_or(0, Colour::get);
    }
    KedgeStatus::Ok
}

/// Message of the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn kedge_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `m` edges given as `2 * m` vertex ids
/// `u0, v0, u1, v1, ...`. Edge ids of the result follow canonical order, not
/// input order.
///
/// # Safety
/// `edges` must point to `2 * m` readable `size_t` values (may be NULL when
/// `m == 0`); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kedge_graph_new(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut KedgeGraph,
) -> KedgeStatus {
    guarded(|| {
        if out.is_null() {
            return fail(KedgeStatus::NullPointer, "NULL argument");
        }
        *out = ptr::null_mut();
        if edges.is_null() && m > 0 {
            return fail(KedgeStatus::NullPointer, "NULL edge array");
        }
        let flat = if m == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<_> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        match Graph::new(n, &pairs) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(KedgeGraph { inner: g }));
                KedgeStatus::Ok
            }
            Err(e) => fail(KedgeStatus::InvalidGraph, e.to_string()),
        }
    })
}

/// Parses the `p <n> <m>` / `e <u> <v>` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kedge_graph_parse(
    text: *const c_char,
    out: *mut *mut KedgeGraph,
) -> KedgeStatus {
    guarded(|| {
        if out.is_null() {
            return fail(KedgeStatus::NullPointer, "NULL argument");
        }
        *out = ptr::null_mut();
        if text.is_null() {
            return fail(KedgeStatus::NullPointer, "NULL text");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(KedgeStatus::ParseError, "input is not UTF-8");
        };
        match read_graph(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(KedgeGraph { inner: g }));
                KedgeStatus::Ok
            }
            Err(e) => fail(KedgeStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `graph` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kedge_graph_free(graph: *mut KedgeGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn kedge_graph_vertex_count(graph: *const KedgeGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn kedge_graph_edge_count(graph: *const KedgeGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn kedge_graph_max_degree(graph: *const KedgeGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.max_degree())
}

/// Endpoints `u < v` of edge `e`.
///
/// # Safety
/// `graph` must be a live handle; `u` and `v` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn kedge_graph_edge(
    graph: *const KedgeGraph,
    e: usize,
    u: *mut usize,
    v: *mut usize,
) -> KedgeStatus {
    let (Some(g), false, false) = (graph.as_ref(), u.is_null(), v.is_null()) else {
        return fail(KedgeStatus::NullPointer, "NULL argument");
    };
    if e >= g.inner.edge_count() {
        return fail(KedgeStatus::OutOfRange, format!("edge {e} out of range"));
    }
    let (a, b) = g.inner.endpoints(e);
    *u = a;
    *v = b;
    KedgeStatus::Ok
}

/// Serialises the graph; release the string with [`kedge_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kedge_graph_write(
    graph: *const KedgeGraph,
    out: *mut *mut c_char,
) -> KedgeStatus {
    let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
        return fail(KedgeStatus::NullPointer, "NULL argument");
    };
    let text = CString::new(write_graph(&g.inner)).expect("graph text has no NUL");
    *out = text.into_raw();
    KedgeStatus::Ok
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kedge_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Decides `k`-edge colourability. The report is returned for both YES and
/// NO; see [`kedge_report_info`].
///
/// # Safety
/// `graph` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kedge_solve(
    graph: *const KedgeGraph,
    k: usize,
    out: *mut *mut KedgeReport,
) -> KedgeStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            return fail(KedgeStatus::NullPointer, "NULL argument");
        };
        let report = solve(&g.inner, k);
        *out = Box::into_raw(Box::new(KedgeReport { inner: report }));
        KedgeStatus::Ok
    })
}

/// # Safety
/// `report` must be NULL or a handle from [`kedge_solve`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kedge_report_free(report: *mut KedgeReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kedge_report_info(
    report: *const KedgeReport,
    out: *mut KedgeReportInfo,
) -> KedgeStatus {
    let (Some(r), false) = (report.as_ref(), out.is_null()) else {
        return fail(KedgeStatus::NullPointer, "NULL argument");
    };
    let r = &r.inner;
    let ns = |d: std::time::Duration| u64::try_from(d.as_nanos()).unwrap_or(u64::MAX);
    *out = KedgeReportInfo {
        k: r.k,
        colourable: r.colourable,
        delta: r.delta,
        core_size: r.core_size,
        semi_core_size: r.semi_core_size.unwrap_or(usize::MAX),
        semi_core_edges: r.semi_core_edges.unwrap_or(usize::MAX),
        shortcut: match r.shortcut {
            Shortcut::None => KedgeShortcut::None,
            Shortcut::DeltaBelowK => KedgeShortcut::DeltaBelowK,
            Shortcut::DeltaAboveK => KedgeShortcut::DeltaAboveK,
        },
        search_nodes: r.search_nodes.unwrap_or(u64::MAX),
        decompose_ns: ns(r.timings.decompose),
        semicore_ns: ns(r.timings.semicore),
        extend_ns: ns(r.timings.extend),
        total_ns: ns(r.timings.total),
    };
    KedgeStatus::Ok
}

/// Copies the witness colouring, one colour per edge id, into `colours`.
/// Fails with `KEDGE_STATUS_NO_WITNESS` on a NO report.
///
/// # Safety
/// `report` must be a live handle; `colours` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn kedge_report_witness(
    report: *const KedgeReport,
    colours: *mut u32,
    len: usize,
) -> KedgeStatus {
    let Some(r) = report.as_ref() else {
        return fail(KedgeStatus::NullPointer, "NULL report");
    };
    match &r.inner.witness {
        Some(w) => colours_out(w, colours, len),
        None => fail(KedgeStatus::NoWitness, "graph is not k-edge colourable"),
    }
}

/// Computes the chromatic index into `value`. When `colours` is non-NULL an
/// optimal colouring is copied there as well.
///
/// # Safety
/// `graph` must be a live handle, `value` a valid pointer, and `colours`
/// NULL or a buffer of `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn kedge_chromatic_index(
    graph: *const KedgeGraph,
    value: *mut usize,
    colours: *mut u32,
    len: usize,
) -> KedgeStatus {
    guarded(|| {
        let (Some(g), false) = (graph.as_ref(), value.is_null()) else {
            return fail(KedgeStatus::NullPointer, "NULL argument");
        };
        match chromatic_index(&g.inner) {
            Ok(ci) => {
                *value = ci.value;
                if colours.is_null() {
                    KedgeStatus::Ok
                } else {
                    colours_out(&ci.witness, colours, len)
                }
            }
            Err(e) => fail(KedgeStatus::Edgeless, e.to_string()),
        }
    })
}

/// Checks that `colours` (one per edge id, `0` = uncoloured) is a complete
/// proper colouring within `1..=k`. Returns `KEDGE_STATUS_INVALID_COLOURING`
/// with the first violation in [`kedge_last_error`] otherwise.
///
/// # Safety
/// `graph` must be a live handle; `colours` must hold `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn kedge_verify(
    graph: *const KedgeGraph,
    k: usize,
    colours: *const u32,
    len: usize,
) -> KedgeStatus {
    guarded(|| {
        let Some(g) = graph.as_ref() else {
            return fail(KedgeStatus::NullPointer, "NULL graph");
        };
        let g = &g.inner;
        if len != g.edge_count() {
            return fail(
                KedgeStatus::BufferTooSmall,
                format!("expected {} colours, got {len}", g.edge_count()),
            );
        }
        if colours.is_null() && len > 0 {
            return fail(KedgeStatus::NullPointer, "NULL colour buffer");
        }
        let raw = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(colours, len)
        };
        let assignment = raw.iter().map(|&c| Colour::new(c)).collect();
        let c = match PartialEdgeColouring::from_assignment(g, k, assignment) {
            Ok(c) => c,
            Err(e) => return fail(KedgeStatus::InvalidColouring, e.to_string()),
        };
        match c.verify_proper(g, true) {
            Ok(()) => KedgeStatus::Ok,
            Err(v) => fail(KedgeStatus::InvalidColouring, v.describe(g)),
        }
    })
}
