"""crossnum test suite"""
