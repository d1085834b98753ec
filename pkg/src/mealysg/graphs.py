"""Small graph utilities: strongly connected components.

Iterative Tarjan with an explicit stack, so deep graphs do not hit the
recursion limit.  SCCs come back in reverse topological order (every edge
leaving a component points to a component earlier in the list), which is
the natural order for dynamic programming over the condensation.
"""

__all__ = ["tarjan_sccs"]


def tarjan_sccs(successors):
    """SCCs of the graph given as a list of successor lists.

    Returns a list of lists of vertex indices, sinks first.
    """
    n = len(successors)
    index = [0] * n  # 1-based visit numbers; 0 = unvisited
    low = [0] * n
    on_stack = bytearray(n)
    stack = []
    sccs = []
    counter = 1

    for start in range(n):
        if index[start]:
            continue
        work = [(start, 0)]
        while work:
            v, next_child = work[-1]
            if next_child == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            descended = False
            succ = successors[v]
            for i in range(next_child, len(succ)):
                w = succ[i]
                if not index[w]:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    return sccs
