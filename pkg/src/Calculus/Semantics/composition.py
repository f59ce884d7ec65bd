from typing import Any, List, Tuple

from src.Calculus.Labels.labels import dual
from src.Calculus.Syntax.terms import good
from src.Calculus.utils.types import TAU, Action, ComposedState, Label, is_tau

class ComposedLTS:
    """
    A server running against a client. Only tau steps: either side moving
    alone, or the server performing co(mu) while the client performs mu.
    """

    def __init__(self, server: Any, client: Any):
        self.server = server
        self.client = client

    def key(self, s: ComposedState) -> str:
        return f"{self.server.key(s.server)} || {self.client.key(s.client)}"

    def is_frontier(self, s: ComposedState) -> bool:
        return False

    def is_good(self, s: ComposedState) -> bool:
        return good(s.client)

    def step(self, s: ComposedState) -> List[Tuple[Label, ComposedState]]:
        server_moves = self.server.step(s.server)
        client_moves = self.client.step(s.client)
        targets = [ComposedState(p, s.client) for l, p in server_moves if is_tau(l)]
        targets += [ComposedState(s.server, t) for l, t in client_moves if is_tau(l)]
        for m, t in client_moves:
            if isinstance(m, Action):
                co = dual(m)
                targets += [ComposedState(p, t) for l, p in server_moves if l == co]
        unique = {self.key(c): c for c in targets}
        return [(TAU, unique[k]) for k in sorted(unique)]

def compose_step(server_engine: Any, client_engine: Any, server: Any, client: Any) -> List[ComposedState]:
    engine = ComposedLTS(server_engine, client_engine)
    return [c for _, c in engine.step(ComposedState(server, client))]
