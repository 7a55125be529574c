"""Linear-time split components (Hopcroft-Tarjan with the Gutwenger-Mutzel fixes).

This module only produces the raw split components as lists of internal edge
indices; :mod:`mixedconn.splitmerge` turns them into labeled graphs and runs
the cycle/bond merge.  All recursion is flattened through generator
trampolines so deep DFS trees do not hit the interpreter's stack limit.

Internal edges ``0 .. m-1`` are the host edges in the order given; every
edge created along the way (bundle edges for parallel classes, virtual
edges of splits) gets the next free index.  Each created edge ends up in
exactly two components.
"""

from __future__ import annotations

from .graph import LabeledMultigraph

UNSEEN, TREE, FROND, REMOVED = 0, 1, 2, 3


def _trampoline(root):
    stack = [root]
    while stack:
        try:
            child = next(stack[-1])
        except StopIteration:
            stack.pop()
        else:
            stack.append(child)


class RawSplit:
    """Result of :func:`raw_split_components`.

    ``components`` lists internal edge indices; ``ends[i]`` are the host
    endpoints of internal edge ``i``; ``host_edges[i]`` is the host
    :class:`~mixedconn.graph.Edge` for ``i < len(host_edges)``.
    """

    __slots__ = ("components", "ends", "host_edges")

    def __init__(self, components, ends, host_edges):
        self.components = components
        self.ends = ends
        self.host_edges = host_edges


def raw_split_components(g: LabeledMultigraph) -> RawSplit:
    """Split components of a biconnected multigraph with at least 3 vertices."""
    host = sorted(g.edges, key=lambda e: e.id)
    verts = sorted(g.vertices)
    index = {x: i for i, x in enumerate(verts)}
    n = len(verts)

    src = []
    tgt = []
    for e in host:
        src.append(index[e.u])
        tgt.append(index[e.v])
    components = []

    # -- bundle parallel edges into bonds -------------------------------
    bundles = {}
    for i in range(len(host)):
        a, b = src[i], tgt[i]
        key = (a, b) if a < b else (b, a)
        bundles.setdefault(key, []).append(i)
    live = []
    for (a, b), ids in bundles.items():
        if len(ids) == 1:
            live.append(ids[0])
            continue
        ev = len(src)
        src.append(a)
        tgt.append(b)
        components.append(ids + [ev])
        live.append(ev)
    live.sort()

    def new_edge(a, b):
        src.append(a)
        tgt.append(b)
        etype.append(UNSEEN)
        start_flag.append(False)
        adj_v.append(-1)
        adj_i.append(-1)
        in_high.append(-1)
        return len(src) - 1

    m_now = len(src)
    etype = [REMOVED] * m_now
    for i in live:
        etype[i] = UNSEEN
    start_flag = [False] * m_now
    adj_v = [-1] * m_now
    adj_i = [-1] * m_now
    in_high = [-1] * m_now

    inc = [[] for _ in range(n)]
    for i in live:
        inc[src[i]].append(i)
        inc[tgt[i]].append(i)

    number = [0] * n
    low1 = [0] * n
    low2 = [0] * n
    nd = [0] * n
    father = [-1] * n
    degree = [0] * n
    tree_arc = [-1] * n
    counter = 0

    # -- DFS1: numbering, lowpoints, descendant counts -------------------
    def dfs1(v, u):
        nonlocal counter
        counter += 1
        number[v] = counter
        father[v] = u
        degree[v] = len(inc[v])
        low1[v] = low2[v] = counter
        nd[v] = 1
        for e in inc[v]:
            if etype[e] != UNSEEN:
                continue
            w = tgt[e] if src[e] == v else src[e]
            if number[w] == 0:
                etype[e] = TREE
                tree_arc[w] = e
                yield dfs1(w, v)
                if low1[w] < low1[v]:
                    low2[v] = min(low1[v], low2[w])
                    low1[v] = low1[w]
                elif low1[w] == low1[v]:
                    low2[v] = min(low2[v], low2[w])
                else:
                    low2[v] = min(low2[v], low1[w])
                nd[v] += nd[w]
            else:
                etype[e] = FROND
                if number[w] < low1[v]:
                    low2[v] = low1[v]
                    low1[v] = number[w]
                elif number[w] > low1[v]:
                    low2[v] = min(low2[v], number[w])

    start = 0
    _trampoline(dfs1(start, -1))

    # orient: tree arcs downwards, fronds upwards
    for e in live:
        up = number[tgt[e]] > number[src[e]]
        if (up and etype[e] == FROND) or (not up and etype[e] == TREE):
            src[e], tgt[e] = tgt[e], src[e]

    # -- acceptable adjacency structure ----------------------------------
    def phi(e):
        v, w = src[e], tgt[e]
        if etype[e] == FROND:
            return 3 * number[w] + 1
        if low2[w] < number[v]:
            return 3 * low1[w]
        return 3 * low1[w] + 2

    adj = [[] for _ in range(n)]
    for e in sorted(live, key=phi):
        v = src[e]
        adj_v[e] = v
        adj_i[e] = len(adj[v])
        adj[v].append(e)
    head = [0] * n

    # high-point lists as one pool of doubly linked nodes
    h_val = []
    h_prev = []
    h_next = []
    h_first = [-1] * n
    h_last = [-1] * n

    def high_push_back(w, val):
        k = len(h_val)
        h_val.append(val)
        h_prev.append(h_last[w])
        h_next.append(-1)
        if h_last[w] >= 0:
            h_next[h_last[w]] = k
        else:
            h_first[w] = k
        h_last[w] = k
        return k

    def high_push_front(w, val):
        k = len(h_val)
        h_val.append(val)
        h_prev.append(-1)
        h_next.append(h_first[w])
        if h_first[w] >= 0:
            h_prev[h_first[w]] = k
        else:
            h_last[w] = k
        h_first[w] = k
        return k

    def del_high(e):
        k = in_high[e]
        if k < 0:
            return
        w = tgt[e]
        p, q = h_prev[k], h_next[k]
        if p >= 0:
            h_next[p] = q
        else:
            h_first[w] = q
        if q >= 0:
            h_prev[q] = p
        else:
            h_last[w] = p
        in_high[e] = -1

    def high(w):
        k = h_first[w]
        return h_val[k] if k >= 0 else 0

    # -- DFS2: renumber so that first children get the highest numbers --
    newnum = [0] * n
    num_count = n
    new_path = True

    def path_finder(v):
        nonlocal num_count, new_path
        newnum[v] = num_count - nd[v] + 1
        for e in adj[v]:
            w = tgt[e]
            if new_path:
                new_path = False
                start_flag[e] = True
            if etype[e] == TREE:
                yield path_finder(w)
                num_count -= 1
            else:
                in_high[e] = high_push_back(w, newnum[v])
                new_path = True

    _trampoline(path_finder(start))
    old2new = [0] * (n + 1)
    for v in range(n):
        old2new[number[v]] = newnum[v]
    nodeat = [0] * (n + 1)
    for v in range(n):
        nodeat[newnum[v]] = v
        low1[v] = old2new[low1[v]]
        low2[v] = old2new[low2[v]]

    # -- path search -------------------------------------------------------
    th = [0]
    ta = [-1]
    tb = [0]
    top = 0
    estack = []

    def t_push(h, a, b):
        nonlocal top
        top += 1
        if top == len(th):
            th.append(h)
            ta.append(a)
            tb.append(b)
        else:
            th[top] = h
            ta[top] = a
            tb[top] = b

    def t_push_eos():
        t_push(0, -1, 0)

    def delete_adj(e):
        v = adj_v[e]
        if v >= 0:
            adj[v][adj_i[e]] = -1
            adj_v[e] = -1

    def put_adj(e, v, i):
        adj[v][i] = e
        adj_v[e] = v
        adj_i[e] = i

    def first_child(w):
        lst = adj[w]
        k = head[w]
        while lst[k] < 0:
            k += 1
        head[w] = k
        return tgt[lst[k]]

    def path_search(v):
        nonlocal top
        vnum = newnum[v]
        lst = adj[v]
        outv = sum(1 for e in lst if e >= 0)
        i = 0
        while i < len(lst):
            e = lst[i]
            if e < 0:
                i += 1
                continue
            w = tgt[e]
            wnum = newnum[w]
            if etype[e] == TREE:
                if start_flag[e]:
                    y = 0
                    if ta[top] > low1[w]:
                        while True:
                            y = max(y, th[top])
                            b = tb[top]
                            top -= 1
                            if ta[top] <= low1[w]:
                                break
                        t_push(y, low1[w], b)
                    else:
                        t_push(wnum + nd[w] - 1, low1[w], vnum)
                    t_push_eos()

                yield path_search(w)

                estack.append(tree_arc[w])

                # type-2 separation pairs
                while vnum != 1 and (
                    ta[top] == vnum
                    or (degree[w] == 2 and newnum[first_child(w)] > wnum)
                ):
                    a = ta[top]
                    b = tb[top]
                    if a == vnum and father[nodeat[b]] == nodeat[a]:
                        top -= 1
                        continue
                    e_ab = -1
                    if degree[w] == 2 and newnum[first_child(w)] > wnum:
                        e1 = estack.pop()
                        e2 = estack.pop()
                        delete_adj(e2)
                        x = tgt[e2]
                        ev = new_edge(v, x)
                        degree[x] -= 1
                        degree[v] -= 1
                        components.append([e1, e2, ev])
                        if estack:
                            e1 = estack[-1]
                            if src[e1] == x and tgt[e1] == v:
                                e_ab = estack.pop()
                                delete_adj(e_ab)
                                del_high(e_ab)
                    else:
                        h = th[top]
                        top -= 1
                        comp = []
                        while True:
                            xy = estack[-1]
                            xs, xt = src[xy], tgt[xy]
                            ns, nt = newnum[xs], newnum[xt]
                            if not (a <= ns <= h and a <= nt <= h):
                                break
                            if (ns == a and nt == b) or (nt == a and ns == b):
                                e_ab = estack.pop()
                                delete_adj(e_ab)
                                del_high(e_ab)
                            else:
                                eh = estack.pop()
                                if not (adj_v[eh] == v and adj_i[eh] == i):
                                    delete_adj(eh)
                                    del_high(eh)
                                comp.append(eh)
                                degree[xs] -= 1
                                degree[xt] -= 1
                        ev = new_edge(nodeat[a], nodeat[b])
                        comp.append(ev)
                        components.append(comp)
                        x = nodeat[b]
                    if e_ab >= 0:
                        bond = [e_ab, ev]
                        ev = new_edge(v, x)
                        bond.append(ev)
                        components.append(bond)
                        degree[x] -= 1
                        degree[v] -= 1
                    estack.append(ev)
                    put_adj(ev, v, i)
                    degree[x] += 1
                    degree[v] += 1
                    father[x] = v
                    tree_arc[x] = ev
                    etype[ev] = TREE
                    w = x
                    wnum = newnum[w]

                # type-1 separation pair
                if low2[w] >= vnum and low1[w] < vnum and (father[v] != start or outv >= 2):
                    comp = []
                    xx = y = 0
                    hi = wnum + nd[w]
                    while estack:
                        xy = estack[-1]
                        xx = newnum[src[xy]]
                        y = newnum[tgt[xy]]
                        if not (wnum <= xx < hi or wnum <= y < hi):
                            break
                        comp.append(estack.pop())
                        del_high(xy)
                        degree[nodeat[xx]] -= 1
                        degree[nodeat[y]] -= 1
                    lw = nodeat[low1[w]]
                    ev = new_edge(v, lw)
                    etype[ev] = FROND
                    comp.append(ev)
                    components.append(comp)
                    if (xx == vnum and y == low1[w]) or (y == vnum and xx == low1[w]):
                        eh = estack.pop()
                        if not (adj_v[eh] == v and adj_i[eh] == i):
                            delete_adj(eh)
                        bond = [eh, ev]
                        ev = new_edge(v, lw)
                        etype[ev] = FROND
                        bond.append(ev)
                        components.append(bond)
                        in_high[ev] = in_high[eh]
                        in_high[eh] = -1
                        degree[v] -= 1
                        degree[lw] -= 1
                    if lw != father[v]:
                        estack.append(ev)
                        put_adj(ev, v, i)
                        if in_high[ev] < 0 and high(lw) < vnum:
                            in_high[ev] = high_push_front(lw, vnum)
                        degree[v] += 1
                        degree[lw] += 1
                    else:
                        lst[i] = -1
                        adj_v[ev] = -1
                        bond = [ev]
                        ev = new_edge(lw, v)
                        bond.append(ev)
                        eh = tree_arc[v]
                        bond.append(eh)
                        components.append(bond)
                        tree_arc[v] = ev
                        etype[ev] = TREE
                        put_adj(ev, adj_v[eh], adj_i[eh])
                        adj_v[eh] = -1

                if start_flag[e]:
                    while ta[top] != -1:
                        top -= 1
                    top -= 1

                while ta[top] != -1 and tb[top] != vnum and high(v) > th[top]:
                    top -= 1

                outv -= 1
            else:
                if start_flag[e]:
                    y = 0
                    if ta[top] > wnum:
                        while True:
                            y = max(y, th[top])
                            b = tb[top]
                            top -= 1
                            if ta[top] <= wnum:
                                break
                        t_push(y, wnum, b)
                    else:
                        t_push(vnum, wnum, vnum)
                if w == father[v]:
                    # a frond parallel to the tree arc: bundle both into a bond
                    lst[i] = -1
                    adj_v[e] = -1
                    del_high(e)
                    eh = tree_arc[v]
                    ev = new_edge(w, v)
                    components.append([e, eh, ev])
                    tree_arc[v] = ev
                    etype[ev] = TREE
                    put_adj(ev, adj_v[eh], adj_i[eh])
                    adj_v[eh] = -1
                    degree[v] -= 1
                    degree[w] -= 1
                else:
                    estack.append(e)
            i += 1

    _trampoline(path_search(start))
    if estack:
        components.append(list(estack))

    host_edges = host
    ends = [(verts[a], verts[b]) for a, b in zip(src, tgt)]
    return RawSplit(components, ends, host_edges)
