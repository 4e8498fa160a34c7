class GuardError(RuntimeError):
    """A brute-force computation was refused because its size exceeds a limit."""

    def __init__(self, guard: str, value: int, limit: int):
        self.guard = guard
        self.value = value
        self.limit = limit
        super().__init__(f"{guard}: {value} exceeds limit {limit}")
