class TrieNode:
    __slots__ = ("children", "values")

    def __init__(self):
        self.children = {}
        self.values = None


class StepCounter:
    """Counts node steps taken by trie walks; pass one in to instrument a search."""

    def __init__(self):
        self.steps = 0


class Trie:
    """Letter trie mapping strings to lists of values, in insertion order.

    The root holds values stored under the empty string.
    """

    def __init__(self):
        self.root = TrieNode()
        self._size = 0

    def __len__(self):
        return self._size

    def insert(self, key, value):
        node = self.root
        for ch in key:
            child = node.children.get(ch)
            if child is None:
                child = node.children[ch] = TrieNode()
            node = child
        if node.values is None:
            node.values = []
        node.values.append(value)
        self._size += 1

    def get(self, key):
        node = self.root
        for ch in key:
            node = node.children.get(ch)
            if node is None:
                return []
        return list(node.values) if node.values else []

    def prefixes(self, text, start=0, counter=None):
        """Yield ``(end, values)`` for every stored key equal to ``text[start:end]``.

        Keys are yielded shortest first; the empty key (at the root) is skipped.
        """
        node = self.root
        for end in range(start + 1, len(text) + 1):
            node = node.children.get(text[end - 1])
            if counter is not None:
                counter.steps += 1
            if node is None:
                return
            if node.values:
                yield end, node.values

    def items(self):
        stack = [("", self.root)]
        while stack:
            prefix, node = stack.pop()
            if node.values:
                for v in node.values:
                    yield prefix, v
            for ch, child in node.children.items():
                stack.append((prefix + ch, child))
