"""Independent checker for cover certificates

Shares nothing with the extraction pipeline except the Graph type: member
lookups and K_2(M) are rebuilt here from the raw clique tuples.
"""

import logging
from itertools import combinations

from .graph import Graph
from .schemas import CoverCertificate, VerifyReport

logger = logging.getLogger(__name__)


def verify_cover(graph: Graph, cliques, cert: CoverCertificate) -> VerifyReport:
    """Check that `cliques` covers the complete r-partite graph described by `cert`.

    Total: every failure becomes a false field plus a line in `problems`.
    """
    problems: list[str] = []
    all_parts = [list(part) for part in cert.parts] + [list(cert.last_part)]
    raw_members = [tuple(clique) for clique in cliques.cliques]
    arity = len(raw_members[0]) if raw_members else cert.r

    parts_ok = len(all_parts) == cert.r
    if not parts_ok:
        problems.append(f"{len(all_parts)} parts for r = {cert.r}")
    owner: dict[int, int] = {}
    for index, part in enumerate(all_parts):
        if len(set(part)) != len(part):
            parts_ok = False
            problems.append(f"part {index} repeats a vertex")
        for v in part:
            if not 0 <= v < graph.n:
                parts_ok = False
                problems.append(f"vertex {v} of part {index} is not a vertex of G")
            elif v in owner and owner[v] != index:
                parts_ok = False
                problems.append(f"vertex {v} lies in parts {owner[v]} and {index}")
            owner.setdefault(v, index)

    covered = set()
    for clique in raw_members:
        covered.update(combinations(sorted(clique), 2))
    completeness_ok = True
    edges_ok = True
    for a, b in combinations(range(len(all_parts)), 2):
        for u in all_parts[a]:
            for v in all_parts[b]:
                if u == v:
                    continue
                if not graph.has_edge(u, v):
                    completeness_ok = False
                    problems.append(f"cross pair ({u}, {v}) is not an edge of G")
                if (min(u, v), max(u, v)) not in covered:
                    edges_ok = False
                    problems.append(f"cross pair ({u}, {v}) lies in no member")

    member_set = set(raw_members)
    part_sets = [set(part) for part in all_parts]
    expected = min((len(part) for part in all_parts), default=0)
    members_ok = len(cert.disjoint_members) == expected
    if not members_ok:
        problems.append(f"{len(cert.disjoint_members)} disjoint members listed, expected {expected}")
    used: set[int] = set()
    for member in cert.disjoint_members:
        member_t = tuple(sorted(member))
        if member_t not in member_set:
            members_ok = False
            problems.append(f"{member_t} is not a member of M")
        if len(member_t) != cert.r or any(len(part & set(member_t)) != 1 for part in part_sets):
            members_ok = False
            problems.append(f"{member_t} is not a transversal of the parts")
        if used & set(member_t):
            members_ok = False
            problems.append(f"{member_t} meets another listed member")
        used.update(member_t)

    sizes_ok = (
        arity == cert.r
        and len(cert.parts) == cert.r - 1
        and all(len(part) == cert.s for part in cert.parts)
        and len(cert.last_part) == cert.t
        and cert.t >= cert.t_min
    )
    if not sizes_ok:
        problems.append(
            f"sizes {[len(p) for p in cert.parts]} + {len(cert.last_part)} do not match "
            f"s = {cert.s}, t = {cert.t} >= t_min = {cert.t_min} for r = {cert.r}"
        )

    all_ok = parts_ok and completeness_ok and edges_ok and members_ok and sizes_ok
    if not all_ok:
        logger.info("certificate rejected: %d problems", len(problems))
    return VerifyReport(
        parts_ok=parts_ok,
        completeness_ok=completeness_ok,
        edges_in_K2M_ok=edges_ok,
        members_ok=members_ok,
        sizes_ok=sizes_ok,
        all_ok=all_ok,
        problems=problems,
    )
