"""
Event emitter base for sweep runners
"""

import asyncio
from collections import defaultdict
from typing import Any, Callable, DefaultDict, List


class EventEmitter:
    """Registers handlers by event name and awaits them in registration order"""

    def __init__(self) -> None:
        """Initialize event emitter"""
        self._listeners: DefaultDict[str, List[Callable[..., Any]]] = defaultdict(list)

    def on(self, event: str, handler: Callable[..., Any]) -> None:
        """
        Register an event handler

        Args:
            event: Event name (start, progress, complete, error)
            handler: Plain function or coroutine function
        """
        self._listeners[event].append(handler)

    def off(self, event: str, handler: Callable[..., Any]) -> None:
        """Remove an event handler"""
        self._listeners[event] = [h for h in self._listeners[event] if h != handler]

    def once(self, event: str, handler: Callable[..., Any]) -> None:
        """Register a handler that is removed after its first call"""

        def wrapper(*args: Any, **kwargs: Any) -> Any:
            self.off(event, wrapper)
            return handler(*args, **kwargs)

        self.on(event, wrapper)

    async def emit(self, event: str, *args: Any, **kwargs: Any) -> None:
        """
        Emit an event

        Coroutine results of handlers are awaited before the next handler runs.
        """
        for handler in list(self._listeners.get(event, [])):
            result = handler(*args, **kwargs)
            if asyncio.iscoroutine(result):
                await result

    def listener_count(self, event: str) -> int:
        """Number of handlers registered for an event"""
        return len(self._listeners.get(event, []))
