"""
Routes package for the Flask application.
This package contains all the route blueprints for the Flask app.
""" 