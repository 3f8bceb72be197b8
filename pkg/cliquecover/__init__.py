"""cliquecover: complete r-partite subgraphs in graphs with many r-cliques"""

__version__ = "1.0.0"
