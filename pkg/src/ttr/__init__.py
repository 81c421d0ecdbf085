"""Tournament transitivity of graphs: exact search, closed forms, trees,
bipartite chain graphs and the NP-hardness gadget."""

__version__ = "0.1.0"
