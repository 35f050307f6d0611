from typing import Any, Dict, List, Optional, Set


class SearchTracer:
    """
    Lightweight in-memory event tracer for the extremal searches.

    Design goals
    ------------
    - **Schema clarity:** Each record is a flat dict with four keys:
      `timestamp`, `type`, `event`, `branch`.
    - **Branch discovery:** On first encounter of a DFS root, a
      `branch_added` record is emitted before that branch's own records.
    - **Deterministic:** `timestamp` is the cumulative node count at the end
      of the branch, never wall-clock time, so two runs of the same search
      produce identical traces whatever the worker count.
    - **Order-preserving:** Records are appended in call order; the search
      feeds branches in root order after merging.

    Notes
    -----
    - `type` is one of `branch_added`, `branch_done`, `new_best`,
      `length_cap`, `node_cap`, `short_circuit`, `result`.
    - The tracer never decides anything; dropping it changes no result.
    """

    def __init__(self) -> None:
        # Append-only event store with the canonical keys described above.
        self.records: List[Dict[str, Any]] = []

        # Root registry to emit exactly one 'branch_added' per root.
        self.known_branches: Set[Any] = set()

    def trace(self, branch: Optional[Any], event_type: str, event: Any, timestamp: int) -> None:
        """
        Record a search event and, if needed, the branch's first-seen marker.

        Parameters
        ----------
        branch : Any | None
            DFS root (text form of the first entry), or None for search-wide events.
        event_type : str
            Record type label.
        event : Any
            JSON-serialisable payload.
        timestamp : int
            Cumulative node count when the event is recorded.
        """
        if branch is not None and branch not in self.known_branches:
            self.known_branches.add(branch)
            self.records.append({
                "timestamp": timestamp,
                "type": "branch_added",
                "event": None,
                "branch": branch,
            })

        self.records.append({
            "timestamp": timestamp,
            "type": event_type,
            "event": event,
            "branch": branch,
        })

    def get_logs(self) -> List[Dict[str, Any]]:
        """Ordered list of records. The list itself is shared; copy if needed."""
        return self.records

    def of_type(self, event_type: str) -> List[Dict[str, Any]]:
        return [r for r in self.records if r["type"] == event_type]
