"""WSGI entry point, served with ``gunicorn src.wsgi:app``."""

from src.app import create_app

app = create_app()

if __name__ == "__main__":
    app.run()
