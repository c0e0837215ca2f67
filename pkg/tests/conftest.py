"""Shared fixtures: deterministic hypothesis profile and an in-process API client."""

from __future__ import annotations

import asyncio

import httpx
import pytest
from hypothesis import settings

from borrowrisk.service import create_app

settings.register_profile("deterministic", derandomize=True, database=None, max_examples=200)
settings.load_profile("deterministic")


class ServiceClient:
    """Synchronous facade over the app via httpx's ASGI transport."""

    def __init__(self) -> None:
        self._app = create_app()

    def request(self, method: str, path: str, **kwargs) -> httpx.Response:
        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=self._app)
            async with httpx.AsyncClient(transport=transport, base_url="http://test") as client:
                return await client.request(method, path, **kwargs)

        return asyncio.run(go())

    def get(self, path: str, **kwargs) -> httpx.Response:
        return self.request("GET", path, **kwargs)

    def post(self, path: str, **kwargs) -> httpx.Response:
        return self.request("POST", path, **kwargs)


@pytest.fixture(scope="session")
def api() -> ServiceClient:
    return ServiceClient()
