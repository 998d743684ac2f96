//! Opt-in instrumentation: component-labeled timing spans plus a coarse
//! operation trace, recorded per thread.
//!
//! With no recorder installed every hook is a single thread-local check and
//! the functional outputs are byte-identical to an uninstrumented run.

use std::cell::RefCell;
use std::time::{Duration, Instant};

/// Component labels attached to timed spans inside the KEM operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    Shake,
    VectorGen,
    PolyMult,
    PolyAdd,
    VectorResize,
    CodeEncode,
    CodeDecode,
    Other,
}

impl Component {
    pub const ALL: [Component; 8] = [
        Component::Shake,
        Component::VectorGen,
        Component::PolyMult,
        Component::PolyAdd,
        Component::VectorResize,
        Component::CodeEncode,
        Component::CodeDecode,
        Component::Other,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Component::Shake => "shake",
            Component::VectorGen => "vector_gen",
            Component::PolyMult => "poly_mult",
            Component::PolyAdd => "poly_add",
            Component::VectorResize => "vector_resize",
            Component::CodeEncode => "code_encode",
            Component::CodeDecode => "code_decode",
            Component::Other => "other",
        }
    }
}

/// Which multiplication kernel a routed product took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulRoute {
    Sparse,
    Dense,
}

/// One recorded operation. Events carry sizes and routes, never data values,
/// so traces taken over different secrets of equal shape compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    PrngInit { tag: u8 },
    PrngBytes { count: usize },
    Derive { tag: u8, out_len: usize },
    SampleDense { bytes: usize },
    SampleFixedWeight { weight: usize, bytes: usize },
    RingAdd,
    RingMul { route: MulRoute, weight: usize },
    CodeEncode,
    CodeDecode,
    Truncate { bits: usize },
    CtCompare { len: usize },
    CtSelect { len: usize },
}

/// Everything captured during one [`record`] call.
#[derive(Debug, Default, Clone)]
pub struct Recording {
    /// Every span in completion order.
    pub spans: Vec<(Component, Duration)>,
    /// Operation trace, empty unless trace collection was requested.
    pub trace: Vec<TraceEvent>,
}

impl Recording {
    /// Total recorded duration per component, in [`Component::ALL`] order.
    pub fn component_totals(&self) -> [(Component, Duration); 8] {
        let mut totals = Component::ALL.map(|c| (c, Duration::ZERO));
        for &(component, dur) in &self.spans {
            let slot = Component::ALL.iter().position(|&c| c == component).unwrap();
            totals[slot].1 += dur;
        }
        totals
    }
}

struct RecorderState {
    spans: Vec<(Component, Duration)>,
    trace: Vec<TraceEvent>,
    collect_trace: bool,
}

thread_local! {
    static ACTIVE: RefCell<Option<RecorderState>> = const { RefCell::new(None) };
}

/// Runs `f` with a recorder installed on the current thread and returns its
/// output together with the captured spans and (optionally) the trace.
pub fn record<T>(collect_trace: bool, f: impl FnOnce() -> T) -> (T, Recording) {
    let previous = ACTIVE.with(|a| {
        a.borrow_mut().replace(RecorderState {
            spans: Vec::new(),
            trace: Vec::new(),
            collect_trace,
        })
    });
    let out = f();
    let state = ACTIVE.with(|a| {
        let mut slot = a.borrow_mut();
        let state = slot.take().expect("recorder removed while active");
        *slot = previous;
        state
    });
    (out, Recording { spans: state.spans, trace: state.trace })
}

/// Times `f` under `component` when a recorder is active; otherwise just
/// runs it.
pub(crate) fn span<T>(component: Component, f: impl FnOnce() -> T) -> T {
    let active = ACTIVE.with(|a| a.borrow().is_some());
    if !active {
        return f();
    }
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    ACTIVE.with(|a| {
        if let Some(state) = a.borrow_mut().as_mut() {
            state.spans.push((component, elapsed));
        }
    });
    out
}

/// Appends a trace event when a trace-collecting recorder is active. The
/// constructor closure only runs in that case.
pub(crate) fn trace(make: impl FnOnce() -> TraceEvent) {
    ACTIVE.with(|a| {
        if let Some(state) = a.borrow_mut().as_mut() {
            if state.collect_trace {
                let event = make();
                state.trace.push(event);
            }
        }
    });
}
