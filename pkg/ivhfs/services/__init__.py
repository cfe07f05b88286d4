"""Operations on intervals, hesitant elements, soft sets, topologies and workspaces."""
